#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace cointjump {

/// Runs fn(i) for i in [0, n) across hardware threads. Work items must write
/// to disjoint slots; chunks are claimed atomically so the mapping of items
/// to threads is irrelevant to the result.
inline void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
    if (n <= 0) return;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (n < 64 || workers == 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::int64_t chunk = std::max<std::int64_t>(1, n / (static_cast<std::int64_t>(workers) * 8));
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::int64_t begin = next.fetch_add(chunk);
            if (begin >= n) return;
            const std::int64_t end = std::min(n, begin + chunk);
            for (std::int64_t i = begin; i < end; ++i) fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace cointjump
