#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace widthlab {

inline constexpr double pi = 3.14159265358979323846;

/// Fixed-dimension Euclidean vector (N = 2 or 3 throughout this library).
template <std::size_t N>
struct Vec {
    std::array<double, N> c{};

    double& operator[](std::size_t i) { return c[i]; }
    double operator[](std::size_t i) const { return c[i]; }

    Vec operator+(const Vec& o) const {
        Vec r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    Vec operator-(const Vec& o) const {
        Vec r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    Vec operator*(double s) const {
        Vec r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = c[i] * s;
        return r;
    }
    Vec operator-() const {
        Vec r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = -c[i];
        return r;
    }
};

template <std::size_t N>
inline double dot(const Vec<N>& a, const Vec<N>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += a.c[i] * b.c[i];
    return s;
}

template <std::size_t N>
inline double norm2(const Vec<N>& a) {
    return dot(a, a);
}

template <std::size_t N>
inline double norm(const Vec<N>& a) {
    return std::sqrt(norm2(a));
}

template <std::size_t N>
inline bool all_finite(const Vec<N>& a) {
    for (std::size_t i = 0; i < N; ++i)
        if (!std::isfinite(a.c[i])) return false;
    return true;
}

/// Point on the unit circle (N=2) or unit sphere (N=3). Construction checks
/// |u| = 1 to 1e-12; use normalized() for raw input.
template <std::size_t N>
class UnitVec {
public:
    explicit UnitVec(const Vec<N>& v) : v_(v) {
        const double n = norm(v);
        if (!(std::abs(n - 1.0) <= 1e-12))
            throw std::invalid_argument("UnitVec: |u| = " + std::to_string(n) +
                                        " is not 1 within 1e-12");
    }

    /// Normalize a nonzero vector onto the sphere.
    static UnitVec normalized(const Vec<N>& v) {
        const double n = norm(v);
        if (!(n > 0.0) || !std::isfinite(n))
            throw std::invalid_argument("UnitVec: cannot normalize zero or non-finite vector");
        return UnitVec(v * (1.0 / n), unchecked_tag{});
    }

    /// For components known unit by construction (cos/sin builds); skips the check.
    static UnitVec unchecked(const Vec<N>& v) { return UnitVec(v, unchecked_tag{}); }

    const Vec<N>& vec() const { return v_; }
    double operator[](std::size_t i) const { return v_.c[i]; }

    UnitVec operator-() const { return UnitVec(-v_, unchecked_tag{}); }

private:
    struct unchecked_tag {};
    UnitVec(const Vec<N>& v, unchecked_tag) : v_(v) {}
    Vec<N> v_;
};

template <std::size_t N>
inline UnitVec<N> normalized(const Vec<N>& v) {
    return UnitVec<N>::normalized(v);
}

/// Direction from polar angle.
inline UnitVec<2> direction_from_angle(double theta) {
    return UnitVec<2>::unchecked(Vec<2>{{std::cos(theta), std::sin(theta)}});
}

/// Direction from azimuth theta and z = cos(phi); exact surface-measure chart.
inline UnitVec<3> direction_from_theta_z(double theta, double z) {
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return UnitVec<3>::unchecked(Vec<3>{{r * std::cos(theta), r * std::sin(theta), z}});
}

}  // namespace widthlab
