#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "schwlab/harmonic.hpp"

namespace schwlab {

/// J_f(z) = |h'(z)|^2 - |g'(z)|^2; positive exactly where f is
/// sense-preserving locally univalent.
double jacobian(const HarmonicMap& f, Complex z);

enum class ScanVerdict {
    no_collision_at_resolution, // no certified witness at this resolution; NOT a proof of injectivity
    collision_found,            // verified witness pair
    inconclusive,               // evaluation failures prevented a full scan
};

struct CollisionWitness {
    Complex z1{};
    Complex z2{};
    double image_gap = 0.0;    // |f(z1) - f(z2)|, below 1e-10 for a witness
    double preimage_gap = 0.0; // |z1 - z2|, at least the separation floor
};

struct InjectivityReport {
    ScanVerdict verdict = ScanVerdict::no_collision_at_resolution;
    std::optional<CollisionWitness> witness;
    int resolution = 0;
    double delta = 0.0; // separation floor
    std::size_t candidates_examined = 0;
    std::size_t evaluation_failures = 0;
};

/// Collision scan: samples a resolution x resolution polar grid (radii up to
/// 1 - 1e-3), buckets images into cells of side (image diameter)/resolution,
/// and refines far-preimage close-image candidate pairs by damped Newton on
/// f(z2) = f(z1) with z1 frozen. A converged pair is re-verified against the
/// witness postconditions before it is reported. Requires resolution >= 32
/// and 0 < delta < 1.
InjectivityReport injectivity_scan(const HarmonicMap& f, int resolution, double delta);

/// Closed image of the unit circle, sampled at strictly increasing angles.
struct BoundaryCurve {
    std::vector<double> theta;   // in [0, 2pi)
    std::vector<Complex> points; // f(e^{i theta})
};

/// Samples f(e^{i theta}) at n equispaced angles. Requires the closed-disk
/// continuity flag and n >= 3.
BoundaryCurve boundary_curve(const HarmonicMap& f, int n);

struct Crossing {
    std::size_t i = 0; // segment indices into the closed polyline
    std::size_t j = 0;
    Complex point{};
};

struct SelfIntersections {
    std::vector<Crossing> crossings;
    std::vector<std::pair<std::size_t, std::size_t>> degenerate; // overlapping collinear pairs
};

/// All transversal crossings between non-adjacent segments of the closed
/// polyline: spatial-hash candidate generation, orientation-test rejection,
/// then bisection on the segment parameters to refine each crossing point.
SelfIntersections self_intersections(const BoundaryCurve& curve);

/// Angles where the boundary tangent speed |d/dtheta f(e^{i theta})| dips
/// below tol, each refined by golden-section minimization. Requires the
/// closed-disk flag and n >= 256.
std::vector<double> cusp_candidates(const HarmonicMap& f, int n, double tol);

} // namespace schwlab
