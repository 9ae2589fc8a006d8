#pragma once

#include <cstdint>

#include "schwlab/jet.hpp"

namespace schwlab {

/// xoshiro256** seeded through splitmix64. Seed and draw order fully
/// determine the stream; split(salt) derives an independent child stream, so
/// suite composition stays reproducible when parts run in isolation.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi);

    /// Uniform on the disk of radius r_max (area measure).
    Complex in_disk(double r_max);

    /// Uniform on the circle |z| = r.
    Complex on_circle(double r);

    Xoshiro256 split(std::uint64_t salt) const;

private:
    std::uint64_t s_[4];
    std::uint64_t seed_;
};

} // namespace schwlab
