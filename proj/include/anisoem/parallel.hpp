#ifndef ANISOEM_PARALLEL_HPP
#define ANISOEM_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace anisoem {

/// Thread cap from ANISO_THREADS (default 1: runs are single-threaded unless
/// asked). Results must be written to per-index slots by the caller so
/// reductions stay in a fixed order and outputs are bit-reproducible for any
/// thread count.
inline int thread_cap() {
    const char* env = std::getenv("ANISO_THREADS");
    if (!env) return 1;
    const int n = std::atoi(env);
    if (n < 1) return 1;
    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    return hw > 0 ? std::min(n, hw) : n;
}

template <typename F>
void parallel_for(std::size_t n, const F& body) {
    const int threads = thread_cap();
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace anisoem

#endif
