#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "widthlab/parallel.hpp"
#include "widthlab/polytope.hpp"

// Deterministic product quadrature for direction averages E[w^k]. The
// integrand has ridge lines where the achieving vertex pair switches, so
// convergence is algebraic rather than spectral; the reported error estimate
// is the delta against the half-resolution grid.

namespace widthlab {

/// Gauss-Legendre nodes and weights on [-1,1] (Newton on the recurrence).
/// Weights sum to 2.
inline std::vector<std::pair<double, double>> gauss_legendre(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    std::vector<std::pair<double, double>> nw(n);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t k = 0; k < half; ++k) {
        double x = std::cos(pi * (static_cast<double>(k) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t j = 2; j <= n; ++j) {
                const double pj = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = pj;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nw[k] = {x, w};
        nw[n - 1 - k] = {-x, w};
    }
    return nw;
}

/// Weighted direction nodes whose weights sum to 1, so a weighted sum is
/// directly the average over the uniform direction measure.
template <std::size_t N>
struct QuadratureGrid {
    std::vector<std::pair<UnitVec<N>, double>> nodes;
    std::size_t n_theta = 0;
    std::size_t n_phi = 0;  // unused in 2D
};

namespace detail {

inline QuadratureGrid<2> circle_grid_unchecked(std::size_t n_theta) {
    QuadratureGrid<2> g;
    g.n_theta = n_theta;
    g.nodes.reserve(n_theta);
    const double w = 1.0 / static_cast<double>(n_theta);
    for (std::size_t i = 0; i < n_theta; ++i)
        g.nodes.emplace_back(direction_from_angle(2.0 * pi * i * w), w);
    return g;
}

inline QuadratureGrid<3> sphere_grid_unchecked(std::size_t n_theta, std::size_t n_phi) {
    QuadratureGrid<3> g;
    g.n_theta = n_theta;
    g.n_phi = n_phi;
    g.nodes.reserve(n_theta * n_phi);
    const auto gl = gauss_legendre(n_phi);
    const double wt = 1.0 / static_cast<double>(n_theta);
    for (const auto& [z, wz] : gl)
        for (std::size_t i = 0; i < n_theta; ++i)
            g.nodes.emplace_back(direction_from_theta_z(2.0 * pi * i * wt, z), 0.5 * wz * wt);
    return g;
}

}  // namespace detail

/// Equally spaced angles on [0,2*pi), equal weights (periodic trapezoid).
inline QuadratureGrid<2> circle_grid(std::size_t n_theta) {
    if (n_theta < 8) throw std::invalid_argument("circle_grid: n_theta must be >= 8");
    return detail::circle_grid_unchecked(n_theta);
}

/// Tensor grid: periodic trapezoid in theta x Gauss-Legendre in z = cos(phi).
/// The GL rule in z absorbs the sin(phi) surface-measure factor exactly.
inline QuadratureGrid<3> sphere_grid(std::size_t n_theta, std::size_t n_phi) {
    if (n_theta < 8) throw std::invalid_argument("sphere_grid: n_theta must be >= 8");
    if (n_phi < 4) throw std::invalid_argument("sphere_grid: n_phi must be >= 4");
    return detail::sphere_grid_unchecked(n_theta, n_phi);
}

enum class MomentMethod { quadrature, monte_carlo };

inline const char* method_name(MomentMethod m) {
    return m == MomentMethod::quadrature ? "quadrature" : "monte-carlo";
}

/// An estimate of E[w^k] with its method and error metadata. For quadrature
/// the error estimate is the half-resolution delta; for Monte Carlo it is
/// the standard error of the mean.
struct MomentEstimate {
    double value = 0.0;
    unsigned k = 1;
    MomentMethod method = MomentMethod::quadrature;
    double error_estimate = 0.0;
    std::uint64_t evaluations = 0;
    std::optional<std::uint64_t> seed;
};

namespace detail {

inline double pow_u(double x, unsigned k) {
    double r = 1.0;
    for (unsigned i = 0; i < k; ++i) r *= x;
    return r;
}

template <std::size_t N>
inline double weighted_moment(const Polytope<N>& p, unsigned k, const QuadratureGrid<N>& grid,
                              unsigned threads) {
    const auto& nodes = grid.nodes;
    return blocked_reduce<double>(
        nodes.size(),
        [&](std::size_t lo, std::size_t hi) {
            double acc = 0.0;
            for (std::size_t i = lo; i < hi; ++i)
                acc += nodes[i].second * pow_u(width_value(p, nodes[i].first), k);
            return acc;
        },
        threads);
}

template <std::size_t N>
QuadratureGrid<N> half_resolution(const QuadratureGrid<N>& grid);

template <>
inline QuadratureGrid<2> half_resolution(const QuadratureGrid<2>& grid) {
    return circle_grid_unchecked(std::max<std::size_t>(1, grid.n_theta / 2));
}

template <>
inline QuadratureGrid<3> half_resolution(const QuadratureGrid<3>& grid) {
    return sphere_grid_unchecked(std::max<std::size_t>(1, grid.n_theta / 2),
                                 std::max<std::size_t>(1, grid.n_phi / 2));
}

}  // namespace detail

/// E[w^k] as the weighted node sum; the half-resolution grid is evaluated
/// internally and its delta reported as the error estimate.
template <std::size_t N>
inline MomentEstimate moment_quadrature(const Polytope<N>& p, unsigned k,
                                        const QuadratureGrid<N>& grid, unsigned threads = 0) {
    const double full = detail::weighted_moment(p, k, grid, threads);
    const auto coarse = detail::half_resolution(grid);
    const double half = detail::weighted_moment(p, k, coarse, threads);

    MomentEstimate est;
    est.value = full;
    est.k = k;
    est.method = MomentMethod::quadrature;
    est.error_estimate = std::abs(full - half);
    est.evaluations = grid.nodes.size() + coarse.nodes.size();
    return est;
}

}  // namespace widthlab
