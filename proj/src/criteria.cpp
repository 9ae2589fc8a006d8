#include "schwlab/criteria.hpp"

#include <cmath>
#include <functional>

#include "schwlab/parallel.hpp"

namespace schwlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double one_minus_sq(Complex z) { return 1.0 - std::norm(z); }

// The bracket of the Schwarz-Pick lemma, shared by lemma_gap and the
// Sh-decomposition identity.
Complex schwarz_pick_bracket(const ComplexJet3& wj, Complex z) {
    const double wz = one_minus_sq(z);
    const double ww = one_minus_sq(wj.d0);
    const Complex wstar = wz * wj.d1 / ww;
    return wz * wz * wj.d2 / (2.0 * ww) - std::conj(z) * wstar + std::conj(wj.d0) * wstar * wstar;
}

// Shared scaffold for the sampled criterion checks: evaluates a margin
// (RHS - LHS) on the grid, tracks the worst sample in canonical scan order,
// counts evaluation failures.
CriterionVerdict run_grid_check(std::string name, const GridSpec& grid, double tol,
                                const std::function<double(Complex)>& margin) {
    CriterionVerdict v;
    v.criterion = std::move(name);
    v.tolerance = tol;
    v.grid = grid;

    bool have = false;
    auto consider = [&](Complex z, double m) {
        ++v.samples_evaluated;
        if (!have || m < v.worst_margin) {
            v.worst_margin = m;
            v.worst_point = z;
            have = true;
        }
    };

    try {
        consider(0.0, margin(0.0));
    } catch (const std::exception&) {
        ++v.unverified;
    }

    const std::vector<double> radii = grid_radii(grid);
    for (std::size_t k = 0; k < radii.size(); ++k) {
        const std::size_t n = grid_angular_count(grid, static_cast<int>(k));
        std::vector<double> margins(n);
        std::vector<unsigned char> failed(n, 0);
        parallel_index(n, [&](std::size_t j) {
            const double theta = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
            try {
                margins[j] = margin(std::polar(radii[k], theta));
            } catch (const std::exception&) {
                failed[j] = 1;
            }
        });
        for (std::size_t j = 0; j < n; ++j) {
            if (failed[j]) {
                ++v.unverified;
                continue;
            }
            const double theta = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
            consider(std::polar(radii[k], theta), margins[j]);
        }
    }

    v.inconclusive = v.unverified > 0;
    v.satisfied = !v.inconclusive && have && v.worst_margin >= -tol;
    return v;
}

} // namespace

double lemma_gap(const HolomorphicEvaluator& omega, Complex z) {
    if (std::abs(z) >= 1.0)
        throw DomainError("lemma_gap: |z| must be < 1");
    const ComplexJet3 wj = omega.eval(z);
    if (std::abs(wj.d0) >= 1.0)
        throw SensePreservationError("lemma_gap: |omega(z)| >= 1");
    const Complex wstar = one_minus_sq(z) * wj.d1 / one_minus_sq(wj.d0);
    return std::abs(schwarz_pick_bracket(wj, z)) - (1.0 - std::norm(wstar));
}

CriterionVerdict thm3_check(const HarmonicMap& f, const GridSpec& grid, double tol) {
    auto margin = [&f](Complex z) {
        const double wz = one_minus_sq(z);
        const Complex sf = harmonic_schwarzian(f, z);
        const Complex ws = omega_star(f, z);
        const Complex af = harmonic_order(f, z);
        const double lhs = wz * wz * std::abs(sf) + 2.0 * std::abs(ws * af);
        return 0.5 * std::norm(ws) - lhs;
    };
    return run_grid_check("thm3", grid, tol, margin);
}

CriterionVerdict thm4_check(const HarmonicMap& f, const GridSpec& grid, double tol) {
    const double c = solve_c();
    const double bound = 2.0 * c * c;
    auto margin = [&f, bound](Complex z) {
        return bound - std::abs(schwarzian(f.h_jet(z)));
    };
    return run_grid_check("thm4", grid, tol, margin);
}

double sh_decomposition_residual(const HarmonicMap& f, Complex z) {
    if (std::abs(z) >= 1.0)
        throw DomainError("sh_decomposition_residual: |z| must be < 1");
    const ComplexJet3 hj = f.h_jet(z);
    const ComplexJet3 wj = f.omega_jet(z);
    const double wz = one_minus_sq(z);

    const Complex lhs = wz * wz * schwarzian(hj);

    const Complex sf = harmonic_schwarzian(f, z);
    const Complex ws = wz * wj.d1 / one_minus_sq(wj.d0);
    const Complex af = harmonic_order(f, z);
    const Complex wbar = std::conj(wj.d0);
    const Complex cross = wbar * ws;
    const Complex rhs = wz * wz * sf - 2.0 * cross * af - 1.5 * cross * cross +
                        2.0 * wbar * schwarz_pick_bracket(wj, z);
    return std::abs(lhs - rhs);
}

double solve_c() {
    // 2x tan x - 1 is increasing on (0, pi/2) with a single sign change.
    auto fn = [](double x) { return 2.0 * x * std::tan(x) - 1.0; };
    double lo = 1e-6, hi = kPi / 2.0 - 1e-6;
    for (int i = 0; i < 200 && (hi - lo) > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (fn(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::pair<double, double> affine_invariance_residuals(const HarmonicMap& f, Complex a, Complex z) {
    const HarmonicMap F = affine_transform(f, a);
    const double ds = std::abs(harmonic_schwarzian(F, z) - harmonic_schwarzian(f, z));
    const double dw = std::abs(std::abs(omega_star(F, z)) - std::abs(omega_star(f, z)));
    return {ds, dw};
}

} // namespace schwlab
