#pragma once

// Minimal block-parallel evaluation: split [0, n) into contiguous blocks,
// run fn(lo, hi) on worker threads, and hand back the per-block results in
// block order so reductions stay deterministic regardless of thread count.

#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace tbm {

template <typename R, typename Fn>
std::vector<R> parallel_blocks(long long n, int threads, Fn&& fn) {
    if (n < 0) throw std::invalid_argument("parallel_blocks: negative range");
    if (threads < 1) threads = 1;
    if (n == 0) return {};
    long long nblocks = std::min<long long>(threads, n);
    std::vector<R> results(static_cast<size_t>(nblocks));
    if (nblocks == 1) {
        results[0] = fn(0LL, n);
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nblocks));
    long long per = n / nblocks, extra = n % nblocks;
    long long lo = 0;
    for (long long b = 0; b < nblocks; ++b) {
        long long hi = lo + per + (b < extra ? 1 : 0);
        pool.emplace_back([&results, &fn, b, lo, hi] {
            results[static_cast<size_t>(b)] = fn(lo, hi);
        });
        lo = hi;
    }
    for (auto& t : pool) t.join();
    return results;
}

} // namespace tbm
