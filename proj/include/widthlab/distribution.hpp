#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "widthlab/parallel.hpp"
#include "widthlab/polytope.hpp"
#include "widthlab/rng.hpp"

// Empirical width distribution: seeded samples, histogram, ECDF, and the
// support interval [min width, diameter]. No closed form for the density is
// attempted; these are the estimation tools.

namespace widthlab {

/// Reproducible draws of w (unit-edge normalized) under the uniform
/// direction model.
struct WidthSampleSet {
    std::string body;
    std::vector<double> samples;
    std::uint64_t seed = 0;
    std::uint64_t n = 0;
};

template <std::size_t N>
inline WidthSampleSet sample_widths(const Polytope<N>& p, std::uint64_t n, std::uint64_t seed,
                                    std::string label = {}, unsigned threads = 0) {
    if (n < 1) throw std::invalid_argument("sample_widths: n must be >= 1");
    WidthSampleSet s;
    s.body = std::move(label);
    s.seed = seed;
    s.n = n;
    s.samples.resize(n);
    const DirectionStream<N> stream{seed};
    parallel_for(
        n, [&](std::size_t i) { s.samples[i] = width_value(p, stream.at(i)); }, threads);
    return s;
}

/// Binned probability masses (counts / n). With an explicit range, samples
/// outside it land in the overflow tally rather than being dropped, so
/// masses sum to 1 - overflow/n (exactly 1 for the data-driven default).
struct HistogramDensity {
    std::vector<double> bin_edges;  // bins+1, strictly increasing
    std::vector<double> masses;     // bins entries
    std::uint64_t n = 0;
    std::uint64_t overflow = 0;
};

inline HistogramDensity histogram_density(const WidthSampleSet& s, std::size_t bins,
                                          std::optional<std::pair<double, double>> range = {}) {
    if (s.samples.empty()) throw std::invalid_argument("histogram_density: empty sample set");
    if (bins < 1) throw std::invalid_argument("histogram_density: bins must be >= 1");

    double lo, hi;
    if (range) {
        lo = range->first;
        hi = range->second;
        if (!(lo < hi)) throw std::invalid_argument("histogram_density: range must be nonempty");
    } else {
        const auto [mn, mx] = std::minmax_element(s.samples.begin(), s.samples.end());
        lo = *mn;
        hi = *mx;
        if (lo == hi) {  // all samples identical; widen so edges stay increasing
            const double pad = std::max(1.0, std::abs(lo)) * 1e-9;
            lo -= pad;
            hi += pad;
        }
    }

    HistogramDensity h;
    h.n = s.samples.size();
    h.bin_edges.resize(bins + 1);
    for (std::size_t j = 0; j <= bins; ++j)
        h.bin_edges[j] = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(bins);
    h.bin_edges.front() = lo;
    h.bin_edges.back() = hi;

    std::vector<std::uint64_t> counts(bins, 0);
    const double scale = static_cast<double>(bins) / (hi - lo);
    for (double x : s.samples) {
        if (x < lo || x > hi) {
            ++h.overflow;
            continue;
        }
        auto j = static_cast<std::size_t>((x - lo) * scale);
        if (j >= bins) j = bins - 1;  // right edge inclusive
        ++counts[j];
    }
    h.masses.resize(bins);
    for (std::size_t j = 0; j < bins; ++j)
        h.masses[j] = static_cast<double>(counts[j]) / static_cast<double>(h.n);
    return h;
}

/// Right-continuous empirical CDF: value(x) = #{samples <= x} / n.
struct Ecdf {
    std::vector<double> sorted;

    double value(double x) const {
        const auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
        return static_cast<double>(it - sorted.begin()) / static_cast<double>(sorted.size());
    }
    double operator()(double x) const { return value(x); }
};

inline Ecdf ecdf(const WidthSampleSet& s) {
    if (s.samples.empty()) throw std::invalid_argument("ecdf: empty sample set");
    Ecdf e;
    e.sorted = s.samples;
    std::sort(e.sorted.begin(), e.sorted.end());
    return e;
}

/// Support interval of the width distribution. The diameter is the exact max
/// pairwise vertex distance; the minimum width comes from a coarse scan of
/// half the sphere (w(u) = w(-u)) followed by a shrinking grid search. The
/// width function has kinks exactly at its minima (active-pair switches), so
/// the refinement is derivative-free by design of the search, not descent.
template <std::size_t N>
struct WidthExtremes {
    double min_width = 0.0;
    UnitVec<N> min_direction;
    double diameter = 0.0;
};

namespace detail {

// chart evaluation: 2D bodies use (theta); 3D use (theta, z) with z clamped.
inline UnitVec<2> chart_dir(const Vec<1>& q) { return direction_from_angle(q[0]); }
inline UnitVec<3> chart_dir(const Vec<2>& q) {
    return direction_from_theta_z(q[0], std::clamp(q[1], -1.0, 1.0));
}

template <std::size_t N, std::size_t M>
inline void refine_min(const Polytope<N>& p, Vec<M>& center, Vec<M>& halfspan, double& best,
                       UnitVec<N>& best_dir, std::size_t iters) {
    constexpr std::size_t kPts = 7;
    for (std::size_t it = 0; it < iters; ++it) {
        Vec<M> arg = center;
        std::array<std::size_t, M> idx{};
        // full kPts^M sweep of the box
        const std::size_t total = M == 1 ? kPts : kPts * kPts;
        for (std::size_t flat = 0; flat < total; ++flat) {
            std::size_t rem = flat;
            Vec<M> q;
            for (std::size_t d = 0; d < M; ++d) {
                idx[d] = rem % kPts;
                rem /= kPts;
                q[d] = center[d] + halfspan[d] * (2.0 * static_cast<double>(idx[d]) /
                                                      static_cast<double>(kPts - 1) -
                                                  1.0);
            }
            const auto dir = chart_dir(q);
            const double w = width_value(p, dir);
            if (w < best) {
                best = w;
                best_dir = dir;
                arg = q;
            }
        }
        center = arg;
        for (std::size_t d = 0; d < M; ++d) halfspan[d] *= 0.5;
    }
}

}  // namespace detail

template <std::size_t N>
WidthExtremes<N> width_extremes(const Polytope<N>& p, std::size_t coarse = 64,
                                std::size_t refine_iters = 60);

template <>
inline WidthExtremes<2> width_extremes(const Polytope<2>& p, std::size_t coarse,
                                       std::size_t refine_iters) {
    if (coarse < 32) throw std::invalid_argument("width_extremes: coarse must be >= 32");
    if (refine_iters < 10) throw std::invalid_argument("width_extremes: refine_iters must be >= 10");

    double best = std::numeric_limits<double>::infinity();
    UnitVec<2> best_dir = direction_from_angle(0.0);
    double best_theta = 0.0;
    for (std::size_t i = 0; i < coarse; ++i) {
        const double theta = pi * static_cast<double>(i) / static_cast<double>(coarse);
        const auto u = direction_from_angle(theta);
        const double w = width_value(p, u);
        if (w < best) {
            best = w;
            best_dir = u;
            best_theta = theta;
        }
    }
    Vec<1> center{{best_theta}};
    Vec<1> halfspan{{pi / static_cast<double>(coarse)}};
    detail::refine_min(p, center, halfspan, best, best_dir, refine_iters);

    return {best, best_dir, diameter(p)};
}

template <>
inline WidthExtremes<3> width_extremes(const Polytope<3>& p, std::size_t coarse,
                                       std::size_t refine_iters) {
    if (coarse < 32) throw std::invalid_argument("width_extremes: coarse must be >= 32");
    if (refine_iters < 10) throw std::invalid_argument("width_extremes: refine_iters must be >= 10");

    double best = std::numeric_limits<double>::infinity();
    UnitVec<3> best_dir = direction_from_theta_z(0.0, 1.0);
    Vec<2> best_q{{0.0, 1.0}};
    for (std::size_t j = 0; j < coarse; ++j) {
        const double z = static_cast<double>(j) / static_cast<double>(coarse - 1);
        for (std::size_t i = 0; i < coarse; ++i) {
            const double theta = 2.0 * pi * static_cast<double>(i) / static_cast<double>(coarse);
            const auto u = direction_from_theta_z(theta, z);
            const double w = width_value(p, u);
            if (w < best) {
                best = w;
                best_dir = u;
                best_q = Vec<2>{{theta, z}};
            }
        }
    }
    Vec<2> center = best_q;
    Vec<2> halfspan{{2.0 * pi / static_cast<double>(coarse), 1.0 / static_cast<double>(coarse - 1)}};
    detail::refine_min(p, center, halfspan, best, best_dir, refine_iters);

    return {best, best_dir, diameter(p)};
}

}  // namespace widthlab
