#include "schwlab/norm.hpp"

#include <algorithm>
#include <cmath>

#include "schwlab/parallel.hpp"

namespace schwlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Generic-pipeline radius cap: beyond this the (1-|omega|^2) cancellation is
// no longer trustworthy in doubles. Family closed forms are exempt.
constexpr double kGenericRadiusCap = 1.0 - 1e-6;
constexpr std::size_t kSkippedReportCap = 16;

} // namespace

std::vector<double> grid_radii(const GridSpec& grid) {
    if (grid.levels < 1 || grid.r_max <= 0.0 || grid.r_max >= 1.0)
        throw DomainError("GridSpec: need levels >= 1 and 0 < r_max < 1");
    // One ring per dyadic level, capped at r_max. Rings are kept even when
    // the cap makes radii coincide, so grids nest as `levels` grows.
    std::vector<double> radii;
    radii.reserve(static_cast<std::size_t>(grid.levels));
    for (int k = 1; k <= grid.levels; ++k)
        radii.push_back(std::min(1.0 - std::exp2(-k), grid.r_max));
    return radii;
}

std::size_t grid_angular_count(const GridSpec& grid, int level) {
    return static_cast<std::size_t>(
        std::llround(grid.angular_base * std::exp2(0.5 * (level + 1))));
}

NormEstimate schwarzian_norm_estimate(const HarmonicMap& f, const GridSpec& grid) {
    const std::vector<double> radii = grid_radii(f.f_alpha ? grid : GridSpec{
        grid.levels, grid.angular_base, std::min(grid.r_max, kGenericRadiusCap)});

    NormEstimate est;
    est.grid = grid;
    est.lower_bound = 0.0;

    auto sample = [&f](Complex z) { return weighted_schwarzian(f, z); };

    // Origin first, then levels in canonical order; the witness is the first
    // strict maximizer in this scan order.
    bool have_value = false;
    try {
        est.lower_bound = sample(0.0);
        est.witness_point = 0.0;
        have_value = true;
    } catch (const std::exception&) {
        ++est.skipped_count;
        est.skipped.push_back(0.0);
    }

    for (std::size_t k = 0; k < radii.size(); ++k) {
        const double r = radii[k];
        const std::size_t n = grid_angular_count(grid, static_cast<int>(k));
        std::vector<double> values(n);
        std::vector<unsigned char> failed(n, 0);
        parallel_index(n, [&](std::size_t j) {
            const double theta = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
            const Complex z = std::polar(r, theta);
            try {
                values[j] = sample(z);
            } catch (const std::exception&) {
                failed[j] = 1;
            }
        });
        for (std::size_t j = 0; j < n; ++j) {
            if (failed[j]) {
                ++est.skipped_count;
                if (est.skipped.size() < kSkippedReportCap)
                    est.skipped.push_back(std::polar(r, 2.0 * kPi * static_cast<double>(j) /
                                                            static_cast<double>(n)));
                continue;
            }
            if (!have_value || values[j] > est.lower_bound) {
                est.lower_bound = values[j];
                est.witness_point = std::polar(r, 2.0 * kPi * static_cast<double>(j) /
                                                      static_cast<double>(n));
                have_value = true;
            }
        }
        GridSpec partial = grid;
        partial.levels = static_cast<int>(k) + 1;
        est.refinement_history.emplace_back(partial, est.lower_bound);
    }

    if (!have_value)
        throw NumericError("schwarzian_norm_estimate: every grid point failed to evaluate");

    // Non-certified Richardson-style guess from the last three history values.
    est.extrapolated = est.lower_bound;
    const auto& hist = est.refinement_history;
    if (hist.size() >= 3) {
        const double b0 = hist[hist.size() - 3].second;
        const double b1 = hist[hist.size() - 2].second;
        const double b2 = hist[hist.size() - 1].second;
        const double d0 = b1 - b0, d1 = b2 - b1;
        if (d0 > 0.0 && d1 > 0.0 && d1 < d0) {
            const double q = std::min(d1 / d0, 0.9);
            est.extrapolated = b2 + d1 * q / (1.0 - q);
        }
    }
    return est;
}

} // namespace schwlab
