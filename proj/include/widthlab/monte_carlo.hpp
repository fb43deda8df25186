#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "widthlab/parallel.hpp"
#include "widthlab/polytope.hpp"
#include "widthlab/quadrature.hpp"
#include "widthlab/rng.hpp"

namespace widthlab {

namespace detail {

struct MomentAccum {
    double sum = 0.0;
    double sum_sq = 0.0;
    MomentAccum operator+(const MomentAccum& o) const { return {sum + o.sum, sum_sq + o.sum_sq}; }
};

}  // namespace detail

/// Seeded Monte Carlo estimate of E[w^k] over the counter-based direction
/// stream. Sample i depends only on (seed, i) and the summation tree has a
/// fixed shape, so the result is bit-identical at any thread count.
template <std::size_t N>
inline MomentEstimate moment_monte_carlo(const Polytope<N>& p, unsigned k, std::uint64_t n,
                                         std::uint64_t seed, unsigned threads = 0) {
    if (n < 100) throw std::invalid_argument("moment_monte_carlo: n must be >= 100");
    const DirectionStream<N> stream{seed};
    const auto acc = blocked_reduce<detail::MomentAccum>(
        n,
        [&](std::size_t lo, std::size_t hi) {
            detail::MomentAccum a;
            for (std::size_t i = lo; i < hi; ++i) {
                const double v = detail::pow_u(width_value(p, stream.at(i)), k);
                a.sum += v;
                a.sum_sq += v * v;
            }
            return a;
        },
        threads);

    const double nn = static_cast<double>(n);
    const double mean = acc.sum / nn;
    const double var = std::max(0.0, (acc.sum_sq - acc.sum * acc.sum / nn) / (nn - 1.0));

    MomentEstimate est;
    est.value = mean;
    est.k = k;
    est.method = MomentMethod::monte_carlo;
    est.error_estimate = std::sqrt(var / nn);
    est.evaluations = n;
    est.seed = seed;
    return est;
}

}  // namespace widthlab
