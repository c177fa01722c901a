#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace kinlab {

// Worker count: KINLAB_THREADS env var, else hardware concurrency.
inline unsigned thread_count() {
    if (const char* env = std::getenv("KINLAB_THREADS")) {
        long n = std::atol(env);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs body(i) for i in [0, n). Work is split into fixed-size blocks pulled
// from a shared counter. Blocks write to disjoint state, so the result does
// not depend on the thread count; reductions must merge per-block partials
// in block order (see block_reduce).
inline void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& block_body,
                         std::size_t grain = 0) {
    if (n == 0) return;
    unsigned nt = thread_count();
    if (grain == 0) grain = (n + 63) / 64 > 0 ? std::max<std::size_t>(1, n / 64) : 1;
    std::size_t nblocks = (n + grain - 1) / grain;
    if (nt <= 1 || nblocks <= 1) {
        for (std::size_t b = 0; b < nblocks; ++b)
            block_body(b * grain, std::min(n, (b + 1) * grain));
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t b = next.fetch_add(1);
            if (b >= nblocks) break;
            block_body(b * grain, std::min(n, (b + 1) * grain));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nt - 1);
    for (unsigned t = 0; t + 1 < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

// Deterministic reduction: partials[b] is filled by block b, then merged
// serially in block order. Identical results for any thread count.
template <class T, class BlockFn>
T block_reduce(std::size_t n, std::size_t grain, T init, BlockFn&& fn) {
    if (n == 0) return init;
    if (grain == 0) grain = std::max<std::size_t>(1, n / 64);
    std::size_t nblocks = (n + grain - 1) / grain;
    std::vector<T> partials(nblocks, init);
    parallel_for(
        n,
        [&](std::size_t lo, std::size_t hi) {
            std::size_t b = lo / grain;
            T acc = init;
            fn(lo, hi, acc);
            partials[b] = acc;
        },
        grain);
    T total = init;
    for (std::size_t b = 0; b < nblocks; ++b) total += partials[b];
    return total;
}

}  // namespace kinlab
