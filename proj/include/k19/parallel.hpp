#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace k19 {

/// Deterministic block map-reduce: the index range [0, n) is cut into fixed
/// blocks, each block is mapped independently, and the per-block results are
/// folded in block order. The outcome is independent of thread count and
/// scheduling as long as `reduce` is associative.
template <typename R, typename MapBlock, typename Reduce>
R parallel_block_reduce(std::size_t n, int threads, std::size_t block_size, R init,
                        MapBlock map_block, Reduce reduce) {
    if (n == 0) return init;
    if (block_size == 0) block_size = 1;
    const std::size_t blocks = (n + block_size - 1) / block_size;

    std::vector<R> partial(blocks, init);
    if (threads <= 1 || blocks == 1) {
        for (std::size_t b = 0; b < blocks; ++b) {
            std::size_t lo = b * block_size;
            std::size_t hi = std::min(n, lo + block_size);
            partial[b] = map_block(lo, hi);
        }
    } else {
        const int t = std::min<std::size_t>(threads, blocks);
        std::vector<std::thread> pool;
        pool.reserve(t);
        for (int id = 0; id < t; ++id) {
            pool.emplace_back([&, id] {
                for (std::size_t b = id; b < blocks; b += t) {
                    std::size_t lo = b * block_size;
                    std::size_t hi = std::min(n, lo + block_size);
                    partial[b] = map_block(lo, hi);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    R acc = init;
    for (std::size_t b = 0; b < blocks; ++b) acc = reduce(acc, partial[b]);
    return acc;
}

}  // namespace k19
