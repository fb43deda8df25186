#pragma once

#include <cstdint>

#include "widthlab/vec.hpp"

// Counter-based pseudo-random stream. Sample i is a pure function of
// (seed, i): we take the i-th output of SplitMix64 in its random-access
// form, z = seed + (i+1)*0x9E3779B97F4A7C15 pushed through the xor-multiply
// finalizer (constants 0xBF58476D1CE4E5B9, 0x94D049BB133111EB, shifts
// 30/27/31). The finalizer is bijective, so distinct counters never collide
// within a stream. This mixing function is part of the output contract and
// is fixed across versions: any evaluation order, thread count, or revisit
// of the same index reproduces identical bits.

namespace widthlab {

inline constexpr std::uint64_t splitmix64_gamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * splitmix64_gamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Uniform double in [0,1) with 53 random bits.
inline double uniform01_at(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(splitmix64_at(seed, index) >> 11) * 0x1.0p-53;
}

/// Deterministic sequence of directions uniform on S^1 or S^2.
/// 2D: sample i consumes counter i, theta = 2*pi*u.
/// 3D: sample i consumes counters 2i and 2i+1 as z = 2*u0 - 1 (area-exact
/// inverse transform of the surface measure) and theta = 2*pi*u1.
template <std::size_t N>
struct DirectionStream;

template <>
struct DirectionStream<2> {
    std::uint64_t seed;

    UnitVec<2> at(std::uint64_t i) const {
        return direction_from_angle(2.0 * pi * uniform01_at(seed, i));
    }
    UnitVec<2> operator[](std::uint64_t i) const { return at(i); }
};

template <>
struct DirectionStream<3> {
    std::uint64_t seed;

    UnitVec<3> at(std::uint64_t i) const {
        const double z = 2.0 * uniform01_at(seed, 2 * i) - 1.0;
        const double theta = 2.0 * pi * uniform01_at(seed, 2 * i + 1);
        return direction_from_theta_z(theta, z);
    }
    UnitVec<3> operator[](std::uint64_t i) const { return at(i); }
};

template <std::size_t N>
inline DirectionStream<N> direction_stream(std::uint64_t seed) {
    return DirectionStream<N>{seed};
}

}  // namespace widthlab
