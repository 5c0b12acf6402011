// Compensated summation and deterministic block-parallel reduction.
//
// Every pairwise / panel sum in this project is reduced the same way: the
// index range is cut into blocks of a fixed size, each block is accumulated
// with Neumaier compensation by exactly one worker, and the per-block results
// are combined serially in block order.  The result is therefore independent
// of the worker count (bit for bit), which the determinism tests rely on.

#ifndef ZETASHIFT_SUMMATION_HPP
#define ZETASHIFT_SUMMATION_HPP

#include <atomic>
#include <cmath>
#include <cstddef>
#include <thread>
#include <vector>

namespace zetashift {

// Neumaier variant of Kahan summation.
struct Accumulator {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

inline unsigned effective_workers(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Splits [0, n_items) into blocks of `block_size` (fixed, never derived from
// the worker count).  `block_fn(b, i0, i1, acc)` accumulates block b's
// contribution for every output slot into `acc` (an Accumulator[n_out]).
// Returns the slot totals combined in block order.
template <class BlockFn>
std::vector<double> block_parallel_reduce(std::size_t n_items,
                                          std::size_t block_size,
                                          std::size_t n_out,
                                          unsigned workers,
                                          BlockFn&& block_fn) {
    if (block_size == 0) block_size = 1;
    const std::size_t n_blocks = n_items == 0 ? 0 : (n_items + block_size - 1) / block_size;
    std::vector<Accumulator> per_block(n_blocks * n_out);

    auto run_block = [&](std::size_t b) {
        const std::size_t i0 = b * block_size;
        const std::size_t i1 = std::min(n_items, i0 + block_size);
        block_fn(b, i0, i1, per_block.data() + b * n_out);
    };

    unsigned w = effective_workers(workers);
    if (w <= 1 || n_blocks <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) run_block(b);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t b = next.fetch_add(1);
                if (b >= n_blocks) break;
                run_block(b);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(w);
        for (unsigned i = 0; i < w; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // serial combine in block order: value independent of scheduling
    std::vector<Accumulator> total(n_out);
    for (std::size_t b = 0; b < n_blocks; ++b)
        for (std::size_t s = 0; s < n_out; ++s)
            total[s].add(per_block[b * n_out + s].value());
    std::vector<double> out(n_out);
    for (std::size_t s = 0; s < n_out; ++s) out[s] = total[s].value();
    return out;
}

} // namespace zetashift

#endif
