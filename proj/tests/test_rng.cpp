#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "test_util.hpp"
#include "widthlab/rng.hpp"
#include "widthlab/vec.hpp"

using namespace widthlab;

TEST_CASE("stream directions are unit vectors") {
    const auto s2d = direction_stream<2>(42);
    const auto s3d = direction_stream<3>(42);
    for (std::size_t i = 0; i < 10000; ++i) {
        REQUIRE(near(norm(s2d.at(i).vec()), 1.0, 1e-12));
        REQUIRE(near(norm(s3d.at(i).vec()), 1.0, 1e-12));
    }
}

TEST_CASE("sample i is a pure function of seed and index") {
    const auto a = direction_stream<3>(7);
    const auto b = direction_stream<3>(7);
    // query out of order; values must not depend on history
    const auto u1 = a.at(1000);
    const auto u2 = a.at(3);
    for (std::size_t d = 0; d < 3; ++d) {
        REQUIRE(u1[d] == b.at(1000)[d]);
        REQUIRE(u2[d] == b.at(3)[d]);
    }

    const auto c = direction_stream<3>(8);
    bool any_differ = false;
    for (std::size_t i = 0; i < 10; ++i)
        if (c.at(i)[0] != a.at(i)[0]) any_differ = true;
    REQUIRE(any_differ);
}

TEST_CASE("uniform01_at fills the unit interval") {
    double lo = 1.0, hi = 0.0;
    for (std::uint64_t i = 0; i < 100000; ++i) {
        const double x = uniform01_at(3, i);
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    REQUIRE(lo < 1e-4);
    REQUIRE(hi > 1.0 - 1e-4);
}

TEST_CASE("z components pass a Kolmogorov-Smirnov test against uniform") {
    const std::size_t n = 1000000;
    const auto stream = direction_stream<3>(1);
    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = stream.at(i)[2];
    std::sort(z.begin(), z.end());

    double ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double cdf = (z[i] + 1.0) / 2.0;  // uniform on [-1, 1]
        const double lo = static_cast<double>(i) / static_cast<double>(n);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
        ks = std::max({ks, std::abs(cdf - lo), std::abs(cdf - hi)});
    }
    const double critical_1pct = 1.63 / std::sqrt(static_cast<double>(n));
    REQUIRE(ks < critical_1pct);
}

TEST_CASE("2D angles cover the circle uniformly") {
    const std::size_t n = 1000000;
    const auto stream = direction_stream<2>(1);
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto u = stream.at(i);
        double a = std::atan2(u[1], u[0]);
        if (a < 0.0) a += 2.0 * pi;
        t[i] = a / (2.0 * pi);
    }
    std::sort(t.begin(), t.end());
    double ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = static_cast<double>(i) / static_cast<double>(n);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
        ks = std::max({ks, std::abs(t[i] - lo), std::abs(t[i] - hi)});
    }
    REQUIRE(ks < 1.63 / std::sqrt(static_cast<double>(n)));
}
