#include "schwlab/rng.hpp"

#include <cmath>

namespace schwlab {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

constexpr double kPi = 3.14159265358979323846;

} // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) : seed_(seed) {
    std::uint64_t sm = seed;
    for (auto& lane : s_)
        lane = splitmix64(sm);
}

std::uint64_t Xoshiro256::next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Xoshiro256::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

Complex Xoshiro256::in_disk(double r_max) {
    const double r = r_max * std::sqrt(uniform());
    const double theta = uniform(0.0, 2.0 * kPi);
    return std::polar(r, theta);
}

Complex Xoshiro256::on_circle(double r) { return std::polar(r, uniform(0.0, 2.0 * kPi)); }

Xoshiro256 Xoshiro256::split(std::uint64_t salt) const {
    std::uint64_t sm = seed_ ^ (0x6a09e667f3bcc909ULL + salt * 0x9e3779b97f4a7c15ULL);
    return Xoshiro256(splitmix64(sm));
}

} // namespace schwlab
