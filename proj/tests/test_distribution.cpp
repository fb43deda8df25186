#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "test_util.hpp"
#include "widthlab/bodies.hpp"
#include "widthlab/distribution.hpp"
#include "widthlab/quadrature.hpp"
#include "widthlab/rng.hpp"

using namespace widthlab;

TEST_CASE("sample_widths draws from the seeded direction stream") {
    const auto tet = canonical::tetrahedron();
    const auto one = sample_widths(tet, 1, 17);
    REQUIRE(one.samples.size() == 1);
    REQUIRE(one.n == 1);
    REQUIRE(one.seed == 17);
    REQUIRE(one.samples[0] == width_value(tet, direction_stream<3>(17).at(0)));

    const auto again = sample_widths(tet, 1000, 17);
    REQUIRE(again.samples[999] == width_value(tet, direction_stream<3>(17).at(999)));
    REQUIRE_THROWS_AS(sample_widths(tet, 0, 1), std::invalid_argument);
}

TEST_CASE("cube sample mean matches the closed form") {
    const auto cube = canonical::cube();
    const auto s = sample_widths(cube, 1000000, 3);
    const double mean = std::accumulate(s.samples.begin(), s.samples.end(), 0.0) /
                        static_cast<double>(s.n);
    double var = 0.0;
    for (double x : s.samples) var += (x - mean) * (x - mean);
    const double se = std::sqrt(var / static_cast<double>(s.n - 1) / static_cast<double>(s.n));
    REQUIRE(near(mean, 1.5, 4.0 * se));
}

TEST_CASE("tetra samples live inside the width support interval") {
    const auto tet = canonical::tetrahedron();
    const auto s = sample_widths(tet, 100000, 23);
    const double lo = 0.70710678118654752 - 1e-9;
    const double hi = 1.0 + 1e-9;
    for (double x : s.samples) {
        REQUIRE(x >= lo);
        REQUIRE(x <= hi);
    }
}

TEST_CASE("histogram masses count every sample") {
    const auto sq = canonical::square();
    const auto s = sample_widths(sq, 100000, 2);

    const auto one_bin = histogram_density(s, 1);
    REQUIRE(one_bin.masses.size() == 1);
    REQUIRE(one_bin.masses[0] == 1.0);
    REQUIRE(one_bin.overflow == 0);

    const auto h = histogram_density(s, 50);
    REQUIRE(h.bin_edges.size() == 51);
    for (std::size_t j = 0; j + 1 < h.bin_edges.size(); ++j)
        REQUIRE(h.bin_edges[j] < h.bin_edges[j + 1]);
    const double total = std::accumulate(h.masses.begin(), h.masses.end(), 0.0);
    REQUIRE(near(total, 1.0, 1e-12));
    for (double m : h.masses) REQUIRE(m >= 0.0);
}

TEST_CASE("explicit histogram ranges tally overflow instead of dropping") {
    WidthSampleSet s;
    s.samples = {0.5, 1.5};
    s.n = 2;
    const auto h = histogram_density(s, 2, std::pair{0.0, 2.0});
    REQUIRE(h.masses.size() == 2);
    REQUIRE(h.masses[0] == 0.5);
    REQUIRE(h.masses[1] == 0.5);
    REQUIRE(h.overflow == 0);

    const auto clipped = histogram_density(s, 2, std::pair{0.0, 1.0});
    REQUIRE(clipped.overflow == 1);
    REQUIRE(near(clipped.masses[0] + clipped.masses[1] +
                     static_cast<double>(clipped.overflow) / static_cast<double>(s.samples.size()),
                 1.0, 1e-12));

    const auto cube = canonical::cube();
    const auto cs = sample_widths(cube, 1000000, 4);
    const auto ch = histogram_density(cs, 200, std::pair{1.0, std::sqrt(3.0)});
    REQUIRE(ch.overflow == 0);

    REQUIRE_THROWS_AS(histogram_density(s, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(histogram_density(s, 2, std::pair{1.0, 1.0}), std::invalid_argument);
    REQUIRE_THROWS_AS(histogram_density(WidthSampleSet{}, 2), std::invalid_argument);
}

TEST_CASE("ecdf is the right-continuous step function of sorted samples") {
    WidthSampleSet s;
    s.samples = {2.0, 1.0, 3.0};
    s.n = 3;
    const auto e = ecdf(s);
    REQUIRE(e.sorted == std::vector<double>{1.0, 2.0, 3.0});
    REQUIRE(e.value(0.5) == 0.0);
    REQUIRE(near(e.value(1.0), 1.0 / 3.0, 1e-16));
    REQUIRE(near(e.value(1.5), 1.0 / 3.0, 1e-16));
    REQUIRE(near(e.value(2.0), 2.0 / 3.0, 1e-16));
    REQUIRE(e.value(3.0) == 1.0);
    REQUIRE(e.value(99.0) == 1.0);
    REQUIRE_THROWS_AS(ecdf(WidthSampleSet{}), std::invalid_argument);
}

TEST_CASE("cube ecdf vanishes below the face width") {
    const auto cube = canonical::cube();
    const auto s = sample_widths(cube, 100000, 6);
    const auto e = ecdf(s);
    REQUIRE(e.value(1.0 - 1e-9) == 0.0);
    REQUIRE(e.value(std::sqrt(3.0)) == 1.0);
}

TEST_CASE("ecdf median and histogram median agree within one bin") {
    const auto cube = canonical::cube();
    const auto s = sample_widths(cube, 1000000, 8);
    const auto e = ecdf(s);
    const double ecdf_median = e.sorted[e.sorted.size() / 2];

    const auto h = histogram_density(s, 100);
    double cum = 0.0;
    double hist_median = h.bin_edges.back();
    for (std::size_t j = 0; j < h.masses.size(); ++j) {
        cum += h.masses[j];
        if (cum >= 0.5) {
            hist_median = 0.5 * (h.bin_edges[j] + h.bin_edges[j + 1]);
            break;
        }
    }
    const double bin_width = h.bin_edges[1] - h.bin_edges[0];
    REQUIRE(near(ecdf_median, hist_median, bin_width));
}

TEST_CASE("width extremes of the canonical bodies") {
    const auto tet_ext = width_extremes(canonical::tetrahedron());
    REQUIRE(near(tet_ext.min_width, 0.70710678118654752, 1e-6));
    REQUIRE(near(tet_ext.diameter, 1.0, 1e-12));
    REQUIRE(near(width_value(canonical::tetrahedron(), tet_ext.min_direction), tet_ext.min_width,
                 1e-15));

    const auto cube_ext = width_extremes(canonical::cube());
    REQUIRE(near(cube_ext.min_width, 1.0, 1e-9));
    REQUIRE(near(cube_ext.diameter, std::sqrt(3.0), 1e-12));

    const auto tri_ext = width_extremes(canonical::triangle());
    REQUIRE(near(tri_ext.min_width, std::sqrt(3.0) / 2.0, 1e-9));
    REQUIRE(near(tri_ext.diameter, 1.0, 1e-12));

    const auto sq_ext = width_extremes(canonical::square());
    REQUIRE(near(sq_ext.min_width, 1.0, 1e-9));
    REQUIRE(near(sq_ext.diameter, std::sqrt(2.0), 1e-12));

    REQUIRE_THROWS_AS(width_extremes(canonical::cube(), 16, 60), std::invalid_argument);
    REQUIRE_THROWS_AS(width_extremes(canonical::cube(), 64, 5), std::invalid_argument);
}

TEST_CASE("refined minimum is never above any evaluated width") {
    const auto tet = canonical::tetrahedron();
    const auto ext = width_extremes(tet);
    const auto stream = direction_stream<3>(31);
    for (std::size_t i = 0; i < 10000; ++i)
        REQUIRE(ext.min_width <= width_value(tet, stream.at(i)) + 1e-12);
}
