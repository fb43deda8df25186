#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "widthlab/vec.hpp"

// Closed-form tables of the squared pairwise projections for the canonical
// bodies in their raw frames, written out term by term. g(u) is the max over
// the listed terms and sqrt(g) is the raw width in direction u. The cube's 28
// vertex pairs collapse to 13 distinct expressions, which further reduce to a
// 4-term max; the square's 6 pairs give 4 distinct expressions reducing to 2.

namespace widthlab::gtab {

inline constexpr double s2 = 1.41421356237309504880;   // sqrt(2)
inline constexpr double s3 = 1.73205080756887729353;   // sqrt(3)
inline constexpr double s6 = 2.44948974278317809820;   // sqrt(6)

/// Equilateral triangle, raw frame: the three pairwise terms in pair order
/// (1,2), (1,3), (2,3).
inline std::array<double, 3> triangle_terms(double a, double b) {
    return {
        0.25 * (3.0 - 6.0 * s3 * a * b + 6.0 * b * b),
        0.75 * (1.0 + 2.0 * s3 * a * b + 2.0 * b * b),
        3.0 * a * a,
    };
}

/// Square, raw frame: the four distinct pairwise expressions.
inline std::array<double, 4> square_terms_full(double a, double b) {
    return {
        2.0 * a * a,
        2.0 * b * b,
        2.0 * (1.0 + 2.0 * a * b),
        2.0 * (1.0 - 2.0 * a * b),
    };
}

/// Square: the two terms that dominate the other two everywhere.
inline std::array<double, 2> square_terms_simplified(double a, double b) {
    return {
        2.0 * (1.0 + 2.0 * a * b),
        2.0 * (1.0 - 2.0 * a * b),
    };
}

/// Regular tetrahedron, raw frame: the six pairwise terms, indexed l = 1..6
/// in pair order (1,2), (1,3), (1,4), (2,3), (2,4), (3,4).
inline double tetra_term(int l, double a, double b, double c) {
    switch (l) {
        case 1: return (8.0 / 9.0) * (a * a - 2.0 * s2 * a * c + 2.0 * c * c);
        case 2: { const double t = s2 * a + s6 * b + 4.0 * c; return t * t / 9.0; }
        case 3: { const double t = s2 * a - s6 * b + 4.0 * c; return t * t / 9.0; }
        case 4: return (2.0 / 3.0) * (3.0 * a * a + 2.0 * s3 * a * b + b * b);
        case 5: return (2.0 / 3.0) * (3.0 * a * a - 2.0 * s3 * a * b + b * b);
        case 6: return (8.0 / 3.0) * b * b;
        default: throw std::invalid_argument("tetra_term: index must be 1..6");
    }
}

inline std::array<double, 6> tetra_terms(double a, double b, double c) {
    std::array<double, 6> t;
    for (int l = 1; l <= 6; ++l) t[static_cast<std::size_t>(l - 1)] = tetra_term(l, a, b, c);
    return t;
}

/// Cube, raw frame: the 13 distinct pairwise expressions.
inline std::array<double, 13> cube_terms_full(double a, double b, double c) {
    const double k = 4.0 / 3.0;
    const double bc_p = b + c, bc_m = b - c;
    return {
        k * a * a,
        k * b * b,
        k * c * c,
        k * (1.0 + 2.0 * a * b - c * c),
        k * (1.0 + 2.0 * a * c - b * b),
        k * (1.0 - 2.0 * a * b - c * c),
        k * (1.0 - 2.0 * a * c - b * b),
        k * bc_p * bc_p,
        k * bc_m * bc_m,
        k * (1.0 + 2.0 * a * b + 2.0 * a * c + 2.0 * b * c),
        k * (1.0 + 2.0 * a * b - 2.0 * a * c - 2.0 * b * c),
        k * (1.0 - 2.0 * a * b - 2.0 * a * c + 2.0 * b * c),
        k * (1.0 - 2.0 * a * b + 2.0 * a * c - 2.0 * b * c),
    };
}

/// Cube: the four diagonal terms that dominate all 13.
inline std::array<double, 4> cube_terms_simplified(double a, double b, double c) {
    const double k = 4.0 / 3.0;
    return {
        k * (1.0 + 2.0 * a * b + 2.0 * a * c + 2.0 * b * c),
        k * (1.0 + 2.0 * a * b - 2.0 * a * c - 2.0 * b * c),
        k * (1.0 - 2.0 * a * b - 2.0 * a * c + 2.0 * b * c),
        k * (1.0 - 2.0 * a * b + 2.0 * a * c - 2.0 * b * c),
    };
}

template <std::size_t K>
inline double max_of(const std::array<double, K>& t) {
    double m = t[0];
    for (std::size_t i = 1; i < K; ++i) m = std::max(m, t[i]);
    return m;
}

}  // namespace widthlab::gtab
