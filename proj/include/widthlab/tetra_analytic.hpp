#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "widthlab/g_tables.hpp"
#include "widthlab/integrate.hpp"
#include "widthlab/vec.hpp"

// Closed-form evaluation of E[w^2] for the unit tetrahedron by sector
// decomposition, independent of sphere quadrature. Tetrahedral symmetry
// splits the sphere into 24 congruent cells; on the cell
// {0 <= theta <= pi/3, phi_boundary(theta) < phi <= pi} only the first
// g-term is active, the phi-integral has an elementary antiderivative, and
// the remaining theta-integral is done numerically to 1e-12.

namespace widthlab::tetra {

/// h(theta) parameterizing the sector boundary.
inline double h_theta(double theta) {
    const double root = std::sqrt(10.0 - std::cos(2.0 * theta) + gtab::s3 * std::sin(2.0 * theta));
    return (std::cos(theta) + gtab::s3 * std::sin(theta) + root) / (2.0 * gtab::s2);
}

/// Boundary curve phi(theta) = 2 arctan h(theta), the solution of g1 = g4.
inline double phi_boundary(double theta) { return 2.0 * std::atan(h_theta(theta)); }

/// Index (1..6) of the largest g-term at spherical direction
/// u = (sin phi cos theta, sin phi sin theta, cos phi); lowest index wins
/// ties within 1e-12.
inline std::size_t active_term(double theta, double phi) {
    const double sp = std::sin(phi);
    const double a = sp * std::cos(theta);
    const double b = sp * std::sin(theta);
    const double c = std::cos(phi);
    const auto t = gtab::tetra_terms(a, b, c);
    double best = t[0];
    for (std::size_t l = 1; l < t.size(); ++l) best = std::max(best, t[l]);
    for (std::size_t l = 0; l < t.size(); ++l)
        if (t[l] >= best - 1e-12) return l + 1;
    return 1;  // unreachable
}

/// Antiderivative in phi of (3/(32 pi)) g1 sin(phi) at fixed theta.
inline double antiderivative_F(double theta, double phi) {
    const double c2t = std::cos(2.0 * theta);
    const double s = std::sin(phi);
    const double num = (-3.0 + c2t) * std::cos(3.0 * phi) - 3.0 * (7.0 + 3.0 * c2t) * std::cos(phi) -
                       16.0 * gtab::s2 * std::cos(theta) * s * s * s;
    return num / (288.0 * pi);
}

/// F(theta, pi) - F(theta, phi_boundary(theta)) in closed form: the inner
/// phi-integral of the sector cell.
inline double sector_inner_integral(double theta) {
    const double h = h_theta(theta);
    const double h2 = h * h;
    const double c2t = std::cos(2.0 * theta);
    const double opp = 1.0 + h2;
    const double num = 6.0 * h2 * h2 + 8.0 * gtab::s2 * h2 * h * std::cos(theta) +
                       3.0 * h2 * (1.0 + c2t) + (3.0 + c2t);
    return num / (18.0 * pi * opp * opp * opp);
}

/// Result of assembling E[w^2] from the sector cell.
struct SectorReport {
    double phi_at_0 = 0.0;
    double phi_at_pi3 = 0.0;
    double sector_integral = 0.0;
    double assembled_mean_square = 0.0;  // 24 * sector_integral
    double reference = 0.0;              // (1/3)(1 + (3+sqrt 3)/pi)
    int symmetry_factor = 24;

    double difference() const { return assembled_mean_square - reference; }
};

inline SectorReport mean_square_width_analytic() {
    const auto integral = integrate_adaptive_simpson(sector_inner_integral, 0.0, pi / 3.0, 1e-12);
    if (!integral.converged) {
        throw std::runtime_error("mean_square_width_analytic: theta integration did not reach 1e-12, achieved " +
                                 std::to_string(integral.error_estimate));
    }
    SectorReport r;
    r.phi_at_0 = phi_boundary(0.0);
    r.phi_at_pi3 = phi_boundary(pi / 3.0);
    r.sector_integral = integral.value;
    r.assembled_mean_square = 24.0 * integral.value;
    r.reference = (1.0 / 3.0) * (1.0 + (3.0 + gtab::s3) / pi);
    return r;
}

/// One point of the surface/contour grid: the normalized width
/// sqrt(3 g / 8) and the active term index.
struct RegionMapRow {
    double theta = 0.0;
    double phi = 0.0;
    double sqrt_3g_over_8 = 0.0;
    std::size_t active = 0;
};

/// Row-major closed grid over [0, 2 pi] x [0, pi]: theta varies over rows,
/// phi within a row.
inline std::vector<RegionMapRow> region_map(std::size_t n_theta, std::size_t n_phi) {
    if (n_theta < 16 || n_phi < 16) {
        throw std::invalid_argument("region_map: grid must be at least 16 x 16");
    }
    std::vector<RegionMapRow> rows;
    rows.reserve(n_theta * n_phi);
    for (std::size_t i = 0; i < n_theta; ++i) {
        const double theta = 2.0 * pi * static_cast<double>(i) / static_cast<double>(n_theta - 1);
        for (std::size_t j = 0; j < n_phi; ++j) {
            const double phi = pi * static_cast<double>(j) / static_cast<double>(n_phi - 1);
            const double sp = std::sin(phi);
            const double a = sp * std::cos(theta);
            const double b = sp * std::sin(theta);
            const double c = std::cos(phi);
            const double g = gtab::max_of(gtab::tetra_terms(a, b, c));
            rows.push_back({theta, phi, std::sqrt(3.0 * g / 8.0), active_term(theta, phi)});
        }
    }
    return rows;
}

}  // namespace widthlab::tetra
