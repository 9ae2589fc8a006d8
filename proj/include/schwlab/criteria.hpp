#pragma once

#include <string>

#include "schwlab/norm.hpp"

namespace schwlab {

/// Outcome of a sampled hypothesis check. `satisfied` means the inequality
/// held (within tolerance) at every verified sample; it is evidence, not a
/// proof, since the underlying hypotheses quantify over the whole disk.
struct CriterionVerdict {
    std::string criterion;
    bool satisfied = false;
    bool inconclusive = false;
    double worst_margin = 0.0; // min over samples of RHS - LHS
    Complex worst_point{};
    std::size_t samples_evaluated = 0;
    std::size_t unverified = 0;
    double tolerance = 0.0;
    GridSpec grid;
};

/// Schwarz-Pick gap of a holomorphic self-map of the disk:
///   |(1-|z|^2)^2 omega''/(2(1-|omega|^2)) - conj(z) omega* + conj(omega) omega*^2|
///   - (1 - |omega*|^2).
/// Nonpositive for genuine self-maps; equality is attained (omega = z
/// everywhere, omega = z^2 at the origin).
double lemma_gap(const HolomorphicEvaluator& omega, Complex z);

/// Injectivity criterion via the order operator: checks
/// (1-|z|^2)^2 |S_f| + 2 |omega* A_f| <= |omega*|^2 / 2 on the grid.
CriterionVerdict thm3_check(const HarmonicMap& f, const GridSpec& grid, double tol = 1e-9);

/// Pointwise bound criterion: checks |Sh(z)| <= 2 c^2 on the grid, with c
/// from solve_c(). The bound is applied exactly as stated - unweighted.
CriterionVerdict thm4_check(const HarmonicMap& f, const GridSpec& grid, double tol = 1e-9);

/// Residual of the identity behind thm3's proof:
///   (1-|z|^2)^2 Sh = (1-|z|^2)^2 S_f - 2 conj(omega) omega* A_f
///                    - (3/2)(conj(omega) omega*)^2
///                    + 2 conj(omega) [schwarz-pick bracket].
/// The left side comes straight from the h-jet; the right side from the
/// dilatation pipeline. Near zero for every locally univalent harmonic map.
double sh_decomposition_residual(const HarmonicMap& f, Complex z);

/// Smallest positive root of 2x tan x = 1, located by bisection on
/// [1e-6, pi/2 - 1e-6]; residual below 1e-12. Approximately 0.6533.
double solve_c();

/// (|S_F(z) - S_f(z)|, ||omega_F*(z)| - |omega*(z)||) for F = f + a conj(f),
/// computed through independent pipelines for f and F. Both vanish
/// analytically.
std::pair<double, double> affine_invariance_residuals(const HarmonicMap& f, Complex a, Complex z);

} // namespace schwlab
