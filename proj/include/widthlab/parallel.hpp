#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

// Deterministic parallelism. Work is cut into fixed-size blocks; each block
// is evaluated sequentially and the per-block results are combined by a
// pairwise tree whose shape depends only on the block count. Worker count
// therefore never changes a single output bit, only who computes which block.

namespace widthlab {

/// Worker cap: WIDTHLAB_THREADS if set (clamped to >= 1), else hardware
/// concurrency. Results are identical for every value.
inline unsigned max_threads() {
    if (const char* env = std::getenv("WIDTHLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

inline constexpr std::size_t default_block_size = 4096;

namespace detail {

template <class R>
inline R pairwise_combine(const std::vector<R>& parts, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return parts[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_combine(parts, lo, mid) + pairwise_combine(parts, mid, hi);
}

}  // namespace detail

/// Reduce block_fn(lo,hi) over [0,count) in blocks of block_size.
/// R needs a default constructor (identity under +) and operator+.
/// threads = 0 means max_threads().
template <class R, class BlockFn>
inline R blocked_reduce(std::size_t count, BlockFn&& block_fn, unsigned threads = 0,
                        std::size_t block_size = default_block_size) {
    if (count == 0) return R{};
    const std::size_t n_blocks = (count + block_size - 1) / block_size;
    std::vector<R> parts(n_blocks);

    auto run_range = [&](std::size_t b0, std::size_t b1) {
        for (std::size_t b = b0; b < b1; ++b) {
            const std::size_t lo = b * block_size;
            const std::size_t hi = std::min(count, lo + block_size);
            parts[b] = block_fn(lo, hi);
        }
    };

    unsigned t = threads == 0 ? max_threads() : threads;
    t = static_cast<unsigned>(std::min<std::size_t>(t, n_blocks));
    if (t <= 1) {
        run_range(0, n_blocks);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(t);
        for (unsigned w = 0; w < t; ++w) {
            const std::size_t b0 = n_blocks * w / t;
            const std::size_t b1 = n_blocks * (w + 1) / t;
            pool.emplace_back(run_range, b0, b1);
        }
        for (auto& th : pool) th.join();
    }
    return detail::pairwise_combine(parts, 0, n_blocks);
}

/// Run fn(i) for i in [0,count) with no reduction; fn writes its own slot.
template <class Fn>
inline void parallel_for(std::size_t count, Fn&& fn, unsigned threads = 0) {
    struct Nothing {
        Nothing operator+(const Nothing&) const { return {}; }
    };
    blocked_reduce<Nothing>(
        count,
        [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
            return Nothing{};
        },
        threads);
}

}  // namespace widthlab
