#pragma once

#include <optional>

#include "schwlab/evaluators.hpp"

namespace schwlab {

/// Planar harmonic mapping f = h + conj(g) with holomorphic h, g and
/// dilatation omega = g'/h'. Sense-preserving local univalence (h' != 0,
/// |omega| < 1) is checked lazily at queried points, not proven globally.
struct HarmonicMap {
    EvaluatorPtr h;
    EvaluatorPtr g;
    EvaluatorPtr omega;
    /// Set by make_f_alpha; enables factored closed-form evaluation of the
    /// hyperbolically weighted Schwarzian near the boundary.
    std::optional<double> f_alpha;

    Complex eval(Complex z) const;

    /// Jet of h at z; throws SingularEvaluation when h'(z) = 0.
    ComplexJet3 h_jet(Complex z) const;

    /// Jet of the dilatation (valid through order 2); throws
    /// SensePreservationError when |omega(z)| >= 1.
    ComplexJet3 omega_jet(Complex z) const;

    bool extends_to_closed_disk() const;
};

/// The extremal family: h_a = (1 - (1-z)^a)/a, g_a = (1 - (1+az)(1-z)^a)/(a(1+a)),
/// dilatation exactly z. Requires alpha > 0.
HarmonicMap make_f_alpha(double alpha);

/// Shear construction: h - g = F and g' = omega h', so h' = F'/(1 - omega).
/// h and g are antiderivatives along [0, z] with g(0) = base_value.
HarmonicMap shear(EvaluatorPtr F, EvaluatorPtr omega, Complex base_value = 0.0);

/// Harmonic map assembled from a prescribed analytic part and dilatation:
/// g is the antiderivative of omega h' with g(0) = base_value.
HarmonicMap shear_from_analytic_part(EvaluatorPtr h, EvaluatorPtr omega,
                                     Complex base_value = 0.0);

/// f = M + c conj(M) for a Mobius transform holomorphic on the closed disk
/// and |c| < 1. Constant dilatation c.
HarmonicMap harmonic_mobius(const MobiusTransform& m, Complex c);

/// F = f + a conj(f): analytic part h + a g, co-analytic part g + conj(a) h,
/// dilatation (omega + conj(a))/(1 + a omega). Requires |a| < 1.
HarmonicMap affine_transform(const HarmonicMap& f, Complex a);

/// Generic (h, g) pair; dilatation derived as g'/h'.
HarmonicMap harmonic_from_parts(EvaluatorPtr h, EvaluatorPtr g);

/// Holomorphic map viewed as harmonic: g = 0, omega = 0.
HarmonicMap holomorphic_map(EvaluatorPtr h);

/// h(z) + conj(g(z)) with a domain check: open disk, or closed disk when the
/// continuity flag is set.
Complex eval_harmonic(const HarmonicMap& f, Complex z);

} // namespace schwlab
