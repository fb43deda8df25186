#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "widthlab/vec.hpp"

namespace widthlab {

/// Convex polytope given by its vertex list. The width of the convex hull in
/// any direction is a max over vertices, so no hull is ever computed.
/// raw widths refer to these coordinates; dividing by edge_norm converts to
/// unit-edge widths (edge_norm = 1 for user polytopes).
template <std::size_t N>
struct Polytope {
    static constexpr std::size_t dimension = N;

    std::vector<Vec<N>> vertices;
    double edge_norm = 1.0;

    std::size_t size() const { return vertices.size(); }
};

/// Validates and deduplicates (pairwise distance <= 1e-12) the vertex list.
/// Interior or repeated points are harmless, so duplicates are dropped, not
/// rejected. Degenerate (collinear/coplanar) inputs are allowed.
template <std::size_t N>
inline Polytope<N> make_polytope(const std::vector<Vec<N>>& verts, double edge_norm = 1.0) {
    if (!(edge_norm > 0.0) || !std::isfinite(edge_norm))
        throw std::invalid_argument("make_polytope: edge_norm must be positive and finite");
    Polytope<N> p;
    p.edge_norm = edge_norm;
    p.vertices.reserve(verts.size());
    for (const auto& v : verts) {
        if (!all_finite(v))
            throw std::invalid_argument("make_polytope: non-finite vertex coordinate");
        bool dup = false;
        for (const auto& kept : p.vertices) {
            if (norm2(v - kept) <= 1e-24) {
                dup = true;
                break;
            }
        }
        if (!dup) p.vertices.push_back(v);
    }
    if (p.vertices.size() < 2)
        throw std::invalid_argument("make_polytope: need at least 2 distinct vertices");
    return p;
}

/// Support function h(u) = max_i <v_i, u>.
template <std::size_t N>
inline double support(const Polytope<N>& p, const UnitVec<N>& u) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : p.vertices) best = std::max(best, dot(v, u.vec()));
    return best;
}

/// Support value together with the first vertex index attaining it.
template <std::size_t N>
inline std::pair<double, std::size_t> support_point(const Polytope<N>& p, const UnitVec<N>& u) {
    double best = dot(p.vertices[0], u.vec());
    std::size_t arg = 0;
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        const double d = dot(p.vertices[i], u.vec());
        if (d > best) {
            best = d;
            arg = i;
        }
    }
    return {best, arg};
}

/// Width of p orthogonal to u, both raw and unit-edge normalized, plus the
/// vertex pair achieving it.
struct WidthEvaluation {
    double width = 0.0;      // raw_width / edge_norm
    double raw_width = 0.0;  // h(u) + h(-u)
    std::pair<std::size_t, std::size_t> achieving_pair{0, 0};
};

namespace detail {

template <std::size_t N>
inline void projections(const Polytope<N>& p, const UnitVec<N>& u, std::vector<double>& out) {
    out.resize(p.vertices.size());
    for (std::size_t i = 0; i < p.vertices.size(); ++i) out[i] = dot(p.vertices[i], u.vec());
}

}  // namespace detail

/// Hot-path width value: (max_i <v_i,u> - min_i <v_i,u>) / edge_norm.
template <std::size_t N>
inline double width_value(const Polytope<N>& p, const UnitVec<N>& u) {
    double hi = dot(p.vertices[0], u.vec());
    double lo = hi;
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        const double d = dot(p.vertices[i], u.vec());
        hi = std::max(hi, d);
        lo = std::min(lo, d);
    }
    return (hi - lo) / p.edge_norm;
}

/// Full width evaluation. The achieving pair is the ordered (i,j) maximizing
/// <v_i - v_j, u>; ties within 1e-12 break to the lexicographically smallest
/// pair, so results are deterministic.
template <std::size_t N>
inline WidthEvaluation width(const Polytope<N>& p, const UnitVec<N>& u) {
    const std::size_t n = p.vertices.size();
    std::vector<double> proj;
    detail::projections(p, u, proj);

    double raw = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) raw = std::max(raw, proj[i] - proj[j]);

    WidthEvaluation ev;
    ev.raw_width = raw;
    ev.width = raw / p.edge_norm;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && proj[i] - proj[j] >= raw - 1e-12) {
                ev.achieving_pair = {i, j};
                return ev;
            }
        }
    }
    return ev;  // unreachable
}

/// Max squared pairwise projection, g = max_{i<j} <v_i - v_j, u>^2, evaluated
/// on the raw vertex frame. sqrt(g) equals the raw width. Same tie rule as
/// width(): lexicographically smallest pair among maxima within 1e-12.
struct GMaxResult {
    double value = 0.0;
    std::pair<std::size_t, std::size_t> achieving_pair{0, 0};
};

template <std::size_t N>
inline GMaxResult g_max(const Polytope<N>& p, const UnitVec<N>& u) {
    const std::size_t n = p.vertices.size();
    std::vector<double> proj;
    detail::projections(p, u, proj);

    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = proj[i] - proj[j];
            best = std::max(best, d * d);
        }

    GMaxResult r;
    r.value = best;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = proj[i] - proj[j];
            if (d * d >= best - 1e-12) {
                r.achieving_pair = {i, j};
                return r;
            }
        }
    }
    return r;  // unreachable
}

/// Independent width oracle via the ball-union construction: a ball of radius
/// 1/2 sits at each v_i/2, and the chord cut by the line t*u out of the union
/// equals the raw width. Each line-ball intersection is solved as the
/// quadratic t^2 - <v_i,u> t + (|v_i|^2 - 1)/4 = 0; the root farther from the
/// origin is the nontrivial one (t = 0 itself is valid when <v_i,u> = 0).
/// The line is parameterized by arclength t, so no direction is singular.
/// The construction requires every vertex on the unit circle/sphere (balls
/// through the origin), which holds for all canonical raw frames.
template <std::size_t N>
inline double ball_union_chord(const Polytope<N>& p, const UnitVec<N>& u) {
    double tmin = std::numeric_limits<double>::infinity();
    double tmax = -tmin;
    for (const auto& v : p.vertices) {
        const double b = dot(v, u.vec());             // sum of roots
        const double c = (norm2(v) - 1.0) * 0.25;     // product of roots
        const double disc = std::max(0.0, b * b - 4.0 * c);
        const double t = 0.5 * (b + std::copysign(std::sqrt(disc), b));
        tmin = std::min(tmin, t);
        tmax = std::max(tmax, t);
    }
    return tmax - tmin;
}

/// Exact maximum pairwise vertex distance, unit-edge normalized. This is the
/// upper end of the width range.
template <std::size_t N>
inline double diameter(const Polytope<N>& p) {
    if (p.vertices.size() < 2)
        throw std::invalid_argument("diameter: need at least 2 vertices");
    double best = 0.0;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < p.vertices.size(); ++j)
            best = std::max(best, norm(p.vertices[i] - p.vertices[j]));
    return best / p.edge_norm;
}

}  // namespace widthlab
