#include <cointjump/specfun.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <cointjump/errors.hpp>

namespace cointjump::specfun {

namespace {
constexpr double kKummerEnvelope = 500.0;
}

double log_factorial(int k) {
    if (k < 0) throw std::invalid_argument("log_factorial: negative argument");
    static const std::vector<double> cache = [] {
        std::vector<double> c(256);
        c[0] = 0.0;
        for (int i = 1; i < 256; ++i) c[i] = c[i - 1] + std::log(static_cast<double>(i));
        return c;
    }();
    if (k < static_cast<int>(cache.size())) return cache[k];
    return std::lgamma(static_cast<double>(k) + 1.0);
}

double log_binomial(int n, int k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double log_poisson_pmf(int k, double alpha) {
    if (k < 0) throw std::invalid_argument("poisson_pmf: negative count");
    if (!(alpha >= 0.0)) throw std::invalid_argument("poisson_pmf: negative intensity");
    if (alpha == 0.0) return k == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    return static_cast<double>(k) * std::log(alpha) - alpha - log_factorial(k);
}

double poisson_pmf(int k, double alpha) { return std::exp(log_poisson_pmf(k, alpha)); }

double poisson_tail_geq(int k, double alpha) {
    if (k < 0) throw std::invalid_argument("poisson_tail_geq: negative count");
    if (!(alpha >= 0.0)) throw std::invalid_argument("poisson_tail_geq: negative intensity");
    if (k == 0) return 1.0;
    if (alpha == 0.0) return 0.0;
    // Sum pi_j upward from j = k; terms are positive and eventually decay
    // faster than geometrically.
    double term = poisson_pmf(k, alpha);
    double sum = term;
    const int j_cap = k + static_cast<int>(alpha + 20.0 * std::sqrt(alpha)) + 200;
    for (int j = k + 1; j <= j_cap; ++j) {
        term *= alpha / static_cast<double>(j);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum < 1.0 ? sum : 1.0;
}

double binomial_weight(int l, int n, double a) {
    if (n < 0 || l < 0) throw std::invalid_argument("binomial_weight: negative index");
    if (l > n) throw std::invalid_argument("binomial_weight: l exceeds n");
    if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("binomial_weight: a outside [0,1]");
    if (n == 0) return 1.0;
    if (a == 0.0) return l == n ? 1.0 : 0.0;
    if (a == 1.0) return l == 0 ? 1.0 : 0.0;
    return std::exp(log_binomial(n, l) + (n - l) * std::log(a) + l * std::log1p(-a));
}

double kummer_m_int(int a, int b, double x) {
    if (a < 1 || b < a) throw std::invalid_argument("kummer_m_int: need integer 1 <= a <= b");
    if (!(x >= 0.0)) throw std::invalid_argument("kummer_m_int: negative argument");
    if (x > kKummerEnvelope)
        throw std::invalid_argument("kummer_m_int: argument beyond the x <= 500 series envelope");
    return static_cast<double>(detail::kummer_dd(a, b, cointjump::detail::dd(x)));
}

namespace detail {

dd kummer_dd(int a, int b, dd x) {
    if (a == 0) return dd(1.0);
    if (a < 0 || b < a) throw std::invalid_argument("kummer_dd: need 0 <= a <= b");
    if (x.hi < 0.0) throw std::invalid_argument("kummer_dd: negative argument");
    if (x.hi > kKummerEnvelope)
        throw std::invalid_argument("kummer_dd: argument beyond the x <= 500 series envelope");
    dd term{1.0};
    dd sum{1.0};
    const int i_cap = static_cast<int>(x.hi + 40.0 * std::sqrt(x.hi + 40.0)) + 400;
    for (int i = 0; i < i_cap; ++i) {
        term = term * x * static_cast<double>(a + i) /
               dd(static_cast<double>(b + i) * static_cast<double>(i + 1));
        sum += term;
        if (term.hi < 1e-34 * sum.hi) return sum;
    }
    throw TruncationError("kummer_dd: series did not converge");
}

dd poisson_tail_geq_dd(int k, dd w) {
    if (k == 0) return dd(1.0);
    if (w.hi == 0.0) return dd(0.0);
    // pi_k(w) = e^{-w} w^k / k!, then sum the ascending tail.
    dd term = dd_exp(-w);
    for (int i = 1; i <= k; ++i) term = term * w / static_cast<double>(i);
    dd sum = term;
    const int j_cap = k + static_cast<int>(w.hi + 40.0 * std::sqrt(w.hi)) + 400;
    for (int j = k + 1; j <= j_cap; ++j) {
        term = term * w / static_cast<double>(j);
        sum += term;
        if (term.hi < 1e-34 * sum.hi) break;
    }
    return sum;
}

}  // namespace detail

}  // namespace cointjump::specfun
