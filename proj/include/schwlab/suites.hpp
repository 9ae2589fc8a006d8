#pragma once

#include "schwlab/harmonic.hpp"
#include "schwlab/rng.hpp"

namespace schwlab {

// Seeded generators for the randomized verification suites. The seed fully
// determines every draw, so suite outputs are reproducible run to run.

/// Blaschke product of degree 1..max_degree with zeros in |a| <= 0.6.
EvaluatorPtr random_blaschke(Xoshiro256& rng, int max_degree);

/// Polynomial of degree <= max_degree whose derivative is zero-free on
/// |z| <= 2, hence locally univalent on the closed disk.
std::vector<Complex> random_locally_univalent_poly(Xoshiro256& rng, int max_degree);

/// Shear with a polynomial analytic part (degree <= 4) and a Blaschke
/// dilatation (degree <= 2).
HarmonicMap random_shear(Xoshiro256& rng);

} // namespace schwlab
