#pragma once

// Counter-based random streams. A stream is a pure function of
// (seed, stream-id, counter), so path i of a simulation owns the disjoint
// stream derived from (seed, i) and results do not depend on how paths are
// scheduled across threads.

#include <cmath>
#include <cstdint>

namespace cointjump {

namespace detail {

// SplitMix64 finalizer (Stafford mix 13); full-avalanche 64-bit PRF step.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace detail

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(detail::mix64(detail::mix64(seed) ^ 0x6a09e667f3bcc909ULL ^
                             detail::mix64(stream * 0x9e3779b97f4a7c15ULL + 1))) {}

    explicit CounterRng(std::uint64_t seed) : CounterRng(seed, 0) {}

    std::uint64_t next_u64() {
        std::uint64_t v = detail::mix64(key_ ^ (counter_ * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
        ++counter_;
        return detail::mix64(v + key_);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Exponential(rate) by inversion.
    double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

    /// Standard normal via Box-Muller; pairs are consumed eagerly so a
    /// stream's draw sequence is independent of call sites.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Poisson(mean) by counting Exponential(1) arrivals below mean.
    int poisson(double mean) {
        if (mean <= 0.0) return 0;
        int k = 0;
        double acc = 0.0;
        while (true) {
            acc += exponential(1.0);
            if (acc > mean) return k;
            ++k;
        }
    }

    bool bernoulli(double p_one) { return uniform() < p_one; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace cointjump
