#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>

#include "widthlab/polytope.hpp"

// The four canonical bodies in their raw frames: vertices on the unit
// circle/sphere with centroid at the origin, plus the edge-length divisor
// that converts raw widths to unit-edge widths.

namespace widthlab {

enum class CanonicalBodyId { triangle, square, tetrahedron, cube };

inline const char* body_name(CanonicalBodyId id) {
    switch (id) {
        case CanonicalBodyId::triangle: return "triangle";
        case CanonicalBodyId::square: return "square";
        case CanonicalBodyId::tetrahedron: return "tetra";
        case CanonicalBodyId::cube: return "cube";
    }
    throw std::invalid_argument("body_name: bad id");
}

/// Accepts the CLI spellings triangle|square|tetra|cube.
inline CanonicalBodyId parse_body(const std::string& s) {
    if (s == "triangle") return CanonicalBodyId::triangle;
    if (s == "square") return CanonicalBodyId::square;
    if (s == "tetra") return CanonicalBodyId::tetrahedron;
    if (s == "cube") return CanonicalBodyId::cube;
    throw std::invalid_argument("unknown body '" + s + "' (expected triangle|square|tetra|cube)");
}

inline int body_dimension(CanonicalBodyId id) {
    return (id == CanonicalBodyId::triangle || id == CanonicalBodyId::square) ? 2 : 3;
}

namespace canonical {

inline Polytope<2> triangle() {
    const double s3 = std::sqrt(3.0);
    return make_polytope<2>(
        {
            {{0.0, 1.0}},
            {{s3 / 2.0, -0.5}},
            {{-s3 / 2.0, -0.5}},
        },
        s3);
}

inline Polytope<2> square() {
    const double h = std::sqrt(2.0) / 2.0;
    return make_polytope<2>(
        {
            {{h, h}},
            {{h, -h}},
            {{-h, h}},
            {{-h, -h}},
        },
        std::sqrt(2.0));
}

inline Polytope<3> tetrahedron() {
    const double s2 = std::sqrt(2.0);
    const double s23 = std::sqrt(2.0 / 3.0);
    return make_polytope<3>(
        {
            {{0.0, 0.0, 1.0}},
            {{2.0 * s2 / 3.0, 0.0, -1.0 / 3.0}},
            {{-s2 / 3.0, s23, -1.0 / 3.0}},
            {{-s2 / 3.0, -s23, -1.0 / 3.0}},
        },
        2.0 * s23);
}

inline Polytope<3> cube() {
    const double h = std::sqrt(3.0) / 3.0;
    std::vector<Vec<3>> v;
    for (double sx : {h, -h})
        for (double sy : {h, -h})
            for (double sz : {h, -h}) v.push_back(Vec<3>{{sx, sy, sz}});
    return make_polytope<3>(v, 2.0 / std::sqrt(3.0));
}

}  // namespace canonical

using AnyPolytope = std::variant<Polytope<2>, Polytope<3>>;

inline AnyPolytope make_body(CanonicalBodyId id) {
    switch (id) {
        case CanonicalBodyId::triangle: return canonical::triangle();
        case CanonicalBodyId::square: return canonical::square();
        case CanonicalBodyId::tetrahedron: return canonical::tetrahedron();
        case CanonicalBodyId::cube: return canonical::cube();
    }
    throw std::invalid_argument("make_body: bad id");
}

/// Closed-form moment of the width distribution of a canonical body.
/// Values are computed from the formulas at run time (never stored as
/// decimals) so tests exercise the transcription, not rounding.
struct ReferenceMoment {
    CanonicalBodyId body;
    unsigned k;
    double value;
    std::string formula_tag;
};

/// The known closed forms exist only for k = 1, 2; anything else is
/// reported unavailable.
inline ReferenceMoment reference_moment(CanonicalBodyId id, unsigned k) {
    const double s3 = std::sqrt(3.0);
    using Id = CanonicalBodyId;
    if (k == 1) {
        switch (id) {
            case Id::triangle: return {id, k, 3.0 / pi, "3/pi"};
            case Id::square: return {id, k, 4.0 / pi, "4/pi"};
            case Id::tetrahedron:
                return {id, k, 3.0 / (2.0 * pi) * std::acos(-1.0 / 3.0),
                        "(3/(2*pi))*acos(-1/3)"};
            case Id::cube: return {id, k, 3.0 / 2.0, "3/2"};
        }
    }
    if (k == 2) {
        switch (id) {
            case Id::triangle:
                return {id, k, 0.5 * (1.0 + 3.0 * s3 / (2.0 * pi)),
                        "(1/2)*(1+3*sqrt(3)/(2*pi))"};
            case Id::square: return {id, k, 1.0 + 2.0 / pi, "1+2/pi"};
            case Id::tetrahedron:
                return {id, k, (1.0 / 3.0) * (1.0 + (3.0 + s3) / pi),
                        "(1/3)*(1+(3+sqrt(3))/pi)"};
            case Id::cube: return {id, k, 1.0 + 4.0 / pi, "1+4/pi"};
        }
    }
    throw std::out_of_range("reference_moment: no closed form for (" +
                            std::string(body_name(id)) + ", k=" + std::to_string(k) + ")");
}

}  // namespace widthlab
