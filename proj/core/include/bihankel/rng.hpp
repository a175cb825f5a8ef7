#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "bihankel/series.hpp"

namespace bihankel {

/// SplitMix64: the state advances by the 64-bit golden gamma per draw and the
/// output is the two-round xor-multiply finalizer of the advanced state. The
/// algorithm is fully specified by these constants, so sequences reproduce
/// bit-for-bit on every platform; golden-output tests pin them.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1): the top 53 bits of next() scaled by 2^-53.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// The SplitMix64 output finalizer as a standalone 64-bit hash.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Seed of the independent substream owned by one sample partition:
/// seed XOR mix64(partition). Partition 0 reuses the base seed.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t partition) {
    return seed ^ mix64(partition);
}

/// Uniform point on the closed unit disk: radius = sqrt(u1), angle = 2 pi u2,
/// radius drawn first.
inline cplx sample_unit_disk(SplitMix64& gen) {
    const double radius = std::sqrt(gen.next_unit());
    const double angle = 2.0 * std::numbers::pi * gen.next_unit();
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

/// Uniform point on the unit circle (one draw, for boundary-biased sampling).
inline cplx sample_unit_circle(SplitMix64& gen) {
    const double angle = 2.0 * std::numbers::pi * gen.next_unit();
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace bihankel
