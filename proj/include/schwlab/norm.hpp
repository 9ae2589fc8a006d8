#pragma once

#include <cstddef>
#include <vector>

#include "schwlab/operators.hpp"

namespace schwlab {

/// Sampling grid for disk suprema. Radial levels r_k = min(1 - 2^{-k}, r_max)
/// for k = 1..levels, plus the origin; level k carries
/// round(angular_base * 2^{k/2}) equispaced angles. Grids nest as `levels`
/// grows, so refining never loses samples.
struct GridSpec {
    int levels = 14;
    int angular_base = 64;
    double r_max = 1.0 - 1e-4;
};

std::vector<double> grid_radii(const GridSpec& grid);
std::size_t grid_angular_count(const GridSpec& grid, int level);

/// Certified lower bound for the hyperbolically weighted supremum
/// sup_z (1-|z|^2)^2 |S_f(z)|. The bound is the max over samples, always
/// attained at witness_point; the extrapolated value is a Richardson-style
/// guess from the refinement history and is not certified.
struct NormEstimate {
    double lower_bound = 0.0;
    Complex witness_point{};
    GridSpec grid;
    std::vector<std::pair<GridSpec, double>> refinement_history;
    double extrapolated = 0.0;
    std::size_t skipped_count = 0;
    std::vector<Complex> skipped; // first few skipped points, for the report
};

NormEstimate schwarzian_norm_estimate(const HarmonicMap& f, const GridSpec& grid);

} // namespace schwlab
