#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace qmh {

inline unsigned threadCount() {
    if (const char* env = std::getenv("QMH_THREADS")) {
        long n = std::atol(env);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/* Chunked parallel loop over [0, n).  Work items must be independent;
 * shared caches on the read path are mutex-guarded by their owners. */
inline void parallel_for(size_t n, const std::function<void(size_t)>& body) {
    unsigned workers = threadCount();
    if (workers <= 1 || n < 64) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace qmh
