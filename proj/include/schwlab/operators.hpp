#pragma once

#include "schwlab/harmonic.hpp"

namespace schwlab {

/// Poincare density of the unit disk, 1/(1 - |z|^2). Requires |z| < 1.
double hyperbolic_density(Complex z);

/// Pf = f''/f'. Requires j.d1 != 0.
Complex pre_schwarzian(const ComplexJet3& j);

/// Sf = (Pf)' - (Pf)^2/2, computed as d3/d1 - (3/2)(d2/d1)^2.
Complex schwarzian(const ComplexJet3& j);

/// P_f = Ph - conj(omega) omega' / (1 - |omega|^2).
Complex harmonic_pre_schwarzian(const HarmonicMap& f, Complex z);

/// S_f = Sh + (conj(omega)/(1-|omega|^2)) ((h''/h') omega' - omega'')
///          - (3/2) (omega' conj(omega)/(1-|omega|^2))^2.
/// Reduces to schwarzian(h-jet) when g = 0.
Complex harmonic_schwarzian(const HarmonicMap& f, Complex z);

/// Hyperbolic derivative of a holomorphic self-map of the disk:
/// omega*(z) = (1-|z|^2) omega'(z) / (1-|omega(z)|^2). |omega*| <= 1
/// (Schwarz-Pick) whenever omega really is a self-map.
Complex omega_star(const HolomorphicEvaluator& omega, Complex z);
Complex omega_star(const HarmonicMap& f, Complex z);

/// Harmonic order operator A_f(z) = (1-|z|^2) P_f(z)/2 - conj(z).
Complex harmonic_order(const HarmonicMap& f, Complex z);

/// (1-|z|^2)^2 |S_f(z)|, the integrand of the Schwarzian norm. Uses the
/// factored closed form for maps tagged as members of the f_alpha family.
double weighted_schwarzian(const HarmonicMap& f, Complex z);

/// Closed form of S_{f_alpha}:
/// (1-a^2)/(2(1-z)^2) + (1-a) conj(z)/((1-|z|^2)(1-z)) - 3 conj(z)^2/(2(1-|z|^2)^2).
Complex s_f_alpha_closed_form(double alpha, Complex z);

/// (1-|z|^2)^2 |S_{f_alpha}(z)| with the (1-|z|^2) powers cancelled
/// analytically, stable arbitrarily close to the boundary.
double weighted_s_f_alpha(double alpha, Complex z);

/// Norm bound for the family: 2(a^2-1) + 2(a-1) + 3/2, valid for a >= 1.
double norm_bound_f_alpha(double alpha);

} // namespace schwlab
