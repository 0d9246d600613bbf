#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace qic {

// Worker count: QIC_THREADS caps parallelism, 0 or unset means auto.
inline int worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("QIC_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) n = static_cast<unsigned>(v);
    }
    return static_cast<int>(n);
}

// Runs fn(i) for i in [0, count) over a fixed block partition. Callers get
// determinism by writing results into slot i only; no reduction happens here.
inline void parallel_for(int count, const std::function<void(int)>& fn) {
    const int workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int lo = w * chunk;
        const int hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (int i = lo; i < hi; ++i) fn(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace qic
