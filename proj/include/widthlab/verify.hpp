#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "widthlab/bodies.hpp"
#include "widthlab/g_tables.hpp"
#include "widthlab/polytope.hpp"
#include "widthlab/quadrature.hpp"
#include "widthlab/rng.hpp"
#include "widthlab/tetra_analytic.hpp"

// The verify suite: one run reproduces every closed-form constant. Each row
// records the applied absolute tolerance; moment rows derive it from the
// 5e-6 relative budget.

namespace widthlab {

struct VerifyRow {
    std::string name;
    double computed = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;  // absolute bound on |computed - reference|
    bool pass = false;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;

    bool all_pass() const {
        return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
    }
};

namespace detail {

inline VerifyRow make_row(std::string name, double computed, double reference, double tol) {
    VerifyRow r{std::move(name), computed, reference, tol, false};
    r.pass = std::abs(computed - reference) <= tol;
    return r;
}

inline constexpr std::uint64_t verify_sweep_seed = 1;
inline constexpr std::size_t verify_sweep_count = 10000;

// max over seeded directions of |max(full terms) - max(simplified terms)|
template <std::size_t N, class Full, class Simpl>
double max_simplification_gap(Full full, Simpl simpl) {
    const auto stream = direction_stream<N>(verify_sweep_seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < verify_sweep_count; ++i) {
        const auto u = stream.at(i);
        worst = std::max(worst, std::abs(full(u) - simpl(u)));
    }
    return worst;
}

// max over bodies and seeded directions of the disagreement between the
// three width oracles: sqrt(g_max), the ball-union chord, and the support
// difference, all raw.
template <std::size_t N>
double oracle_gap(const Polytope<N>& p) {
    const auto stream = direction_stream<N>(verify_sweep_seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < verify_sweep_count; ++i) {
        const auto u = stream.at(i);
        const double raw = width_value(p, u) * p.edge_norm;
        const double g = std::sqrt(g_max(p, u).value);
        const double chord = ball_union_chord(p, u);
        worst = std::max({worst, std::abs(g - raw), std::abs(chord - raw)});
    }
    return worst;
}

}  // namespace detail

inline VerifyReport run_verify(unsigned threads = 0) {
    VerifyReport rep;

    const auto grid2 = circle_grid(65536);
    const auto grid3 = sphere_grid(2048, 1024);

    for (const auto id : {CanonicalBodyId::triangle, CanonicalBodyId::square,
                          CanonicalBodyId::tetrahedron, CanonicalBodyId::cube}) {
        const AnyPolytope body = make_body(id);
        for (unsigned k = 1; k <= 2; ++k) {
            const auto ref = reference_moment(id, k);
            const double computed = std::visit(
                [&](const auto& p) {
                    if constexpr (std::decay_t<decltype(p)>::dimension == 2)
                        return moment_quadrature(p, k, grid2, threads).value;
                    else
                        return moment_quadrature(p, k, grid3, threads).value;
                },
                body);
            const std::string label =
                std::string(body_name(id)) + (k == 1 ? " E[w] quadrature" : " E[w^2] quadrature");
            rep.rows.push_back(
                detail::make_row(label, computed, ref.value, 5e-6 * std::abs(ref.value)));
        }
    }

    const auto sector = tetra::mean_square_width_analytic();
    rep.rows.push_back(detail::make_row("tetra E[w^2] sector pipeline",
                                        sector.assembled_mean_square, sector.reference, 1e-9));
    rep.rows.push_back(detail::make_row("sector boundary phi(0)", sector.phi_at_0, 1.9106, 1e-4));
    rep.rows.push_back(
        detail::make_row("sector boundary phi(pi/3)", sector.phi_at_pi3, 2.1862, 1e-4));

    rep.rows.push_back(detail::make_row(
        "square g 4->2 term max",
        detail::max_simplification_gap<2>(
            [](const UnitVec<2>& u) { return gtab::max_of(gtab::square_terms_full(u[0], u[1])); },
            [](const UnitVec<2>& u) {
                return gtab::max_of(gtab::square_terms_simplified(u[0], u[1]));
            }),
        0.0, 1e-12));
    rep.rows.push_back(detail::make_row(
        "cube g 13->4 term max",
        detail::max_simplification_gap<3>(
            [](const UnitVec<3>& u) {
                return gtab::max_of(gtab::cube_terms_full(u[0], u[1], u[2]));
            },
            [](const UnitVec<3>& u) {
                return gtab::max_of(gtab::cube_terms_simplified(u[0], u[1], u[2]));
            }),
        0.0, 1e-12));

    double oracle_worst = 0.0;
    for (const auto id : {CanonicalBodyId::triangle, CanonicalBodyId::square,
                          CanonicalBodyId::tetrahedron, CanonicalBodyId::cube}) {
        oracle_worst = std::max(
            oracle_worst,
            std::visit([](const auto& p) { return detail::oracle_gap(p); }, make_body(id)));
    }
    rep.rows.push_back(detail::make_row("width oracle agreement", oracle_worst, 0.0, 1e-12));

    return rep;
}

inline void write_verify_table(std::ostream& out, const VerifyReport& rep) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-30s %22s %22s %10s %6s", "check", "computed", "reference",
                  "tol", "status");
    out << line << '\n';
    for (const auto& r : rep.rows) {
        std::snprintf(line, sizeof(line), "%-30s %22.15g %22.15g %10.1e %6s", r.name.c_str(),
                      r.computed, r.reference, r.tolerance, r.pass ? "PASS" : "FAIL");
        out << line << '\n';
    }
    out << (rep.all_pass() ? "all checks passed" : "VERIFICATION FAILED") << '\n';
}

}  // namespace widthlab
