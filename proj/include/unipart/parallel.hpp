#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace unipart {

// Worker cap: UNIPART_THREADS when set and positive, hardware otherwise.
inline std::size_t worker_count() {
    if (const char* env = std::getenv("UNIPART_THREADS")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs f(i) for i in [0, n), partitioned into contiguous blocks across
// workers. Each index is processed exactly once with the same arithmetic as a
// serial loop, so writes to disjoint slots are deterministic.
template <typename F>
void parallel_for(std::size_t n, F&& f, std::size_t max_workers = 0) {
    std::size_t workers = max_workers ? max_workers : worker_count();
    if (workers > n) workers = n ? n : 1;
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = lo + chunk < n ? lo + chunk : n;
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace unipart
