#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace anyd {

inline int64_t chunk_count(int64_t n, int threads) {
    return std::max<int64_t>(1, std::min<int64_t>(threads < 1 ? 1 : threads, n));
}

// Runs fn(begin, end, chunk_index) over [0, n) split into chunk_count(n,
// threads) contiguous chunks. A single chunk runs inline on the calling
// thread with no spawns. Chunks write disjoint data by contract, so results
// do not depend on the chunk count.
template <typename Fn>
void parallel_chunks(int64_t n, int threads, Fn&& fn) {
    if (n <= 0) return;
    const int64_t n_chunks = chunk_count(n, threads);
    if (n_chunks <= 1) {
        fn(int64_t{0}, n, int64_t{0});
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(n_chunks - 1));
    const int64_t base = n / n_chunks;
    const int64_t extra = n % n_chunks;
    int64_t begin = 0;
    for (int64_t k = 0; k < n_chunks; ++k) {
        const int64_t end = begin + base + (k < extra ? 1 : 0);
        if (k == n_chunks - 1) {
            fn(begin, end, k); // last chunk on the calling thread
        } else {
            workers.emplace_back([&fn, begin, end, k] { fn(begin, end, k); });
        }
        begin = end;
    }
    for (auto& w : workers) w.join();
}

inline int hardware_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

} // namespace anyd
