#include "schwlab/operators.hpp"

#include <cmath>

namespace schwlab {

namespace {

double one_minus_sq(Complex z) { return 1.0 - std::norm(z); }

} // namespace

double hyperbolic_density(Complex z) {
    const double d = one_minus_sq(z);
    if (d <= 0.0)
        throw DomainError("hyperbolic_density: |z| must be < 1");
    return 1.0 / d;
}

Complex pre_schwarzian(const ComplexJet3& j) {
    if (j.d1 == 0.0)
        throw SingularEvaluation("pre_schwarzian: vanishing first derivative");
    return j.d2 / j.d1;
}

Complex schwarzian(const ComplexJet3& j) {
    if (j.d1 == 0.0)
        throw SingularEvaluation("schwarzian: vanishing first derivative");
    const Complex p = j.d2 / j.d1;
    return j.d3 / j.d1 - 1.5 * p * p;
}

Complex harmonic_pre_schwarzian(const HarmonicMap& f, Complex z) {
    if (std::abs(z) >= 1.0)
        throw DomainError("harmonic_pre_schwarzian: |z| must be < 1");
    const ComplexJet3 hj = f.h_jet(z);
    const ComplexJet3 wj = f.omega_jet(z);
    const Complex ph = hj.d2 / hj.d1;
    return ph - std::conj(wj.d0) * wj.d1 / one_minus_sq(wj.d0);
}

Complex harmonic_schwarzian(const HarmonicMap& f, Complex z) {
    if (std::abs(z) >= 1.0)
        throw DomainError("harmonic_schwarzian: |z| must be < 1");
    const ComplexJet3 hj = f.h_jet(z);
    const ComplexJet3 wj = f.omega_jet(z);
    const Complex sh = schwarzian(hj);
    const Complex ph = hj.d2 / hj.d1;
    const Complex wbar = std::conj(wj.d0);
    const double denom = one_minus_sq(wj.d0);
    const Complex cross = wj.d1 * wbar / denom;
    return sh + (wbar / denom) * (ph * wj.d1 - wj.d2) - 1.5 * cross * cross;
}

Complex omega_star(const HolomorphicEvaluator& omega, Complex z) {
    if (std::abs(z) >= 1.0)
        throw DomainError("omega_star: |z| must be < 1");
    const ComplexJet3 wj = omega.eval(z);
    if (std::abs(wj.d0) >= 1.0)
        throw SensePreservationError("omega_star: |omega(z)| >= 1");
    return one_minus_sq(z) * wj.d1 / one_minus_sq(wj.d0);
}

Complex omega_star(const HarmonicMap& f, Complex z) { return omega_star(*f.omega, z); }

Complex harmonic_order(const HarmonicMap& f, Complex z) {
    return 0.5 * one_minus_sq(z) * harmonic_pre_schwarzian(f, z) - std::conj(z);
}

double weighted_schwarzian(const HarmonicMap& f, Complex z) {
    if (f.f_alpha)
        return weighted_s_f_alpha(*f.f_alpha, z);
    const double w = one_minus_sq(z);
    return w * w * std::abs(harmonic_schwarzian(f, z));
}

Complex s_f_alpha_closed_form(double alpha, Complex z) {
    if (std::abs(z) >= 1.0)
        throw DomainError("s_f_alpha_closed_form: |z| must be < 1");
    const Complex one_minus_z = 1.0 - z;
    const double w = one_minus_sq(z);
    const Complex zbar = std::conj(z);
    return (1.0 - alpha * alpha) / (2.0 * one_minus_z * one_minus_z) +
           (1.0 - alpha) * zbar / (w * one_minus_z) -
           1.5 * zbar * zbar / (w * w);
}

double weighted_s_f_alpha(double alpha, Complex z) {
    if (std::abs(z) >= 1.0)
        throw DomainError("weighted_s_f_alpha: |z| must be < 1");
    const Complex one_minus_z = 1.0 - z;
    const double w = one_minus_sq(z);
    const Complex zbar = std::conj(z);
    const Complex ratio = w / one_minus_z; // stays bounded as |z| -> 1
    return std::abs((1.0 - alpha * alpha) / 2.0 * ratio * ratio +
                    (1.0 - alpha) * zbar * ratio -
                    1.5 * zbar * zbar);
}

double norm_bound_f_alpha(double alpha) {
    if (alpha < 1.0)
        throw DomainError("norm_bound_f_alpha: bound requires alpha >= 1");
    return 2.0 * (alpha * alpha - 1.0) + 2.0 * (alpha - 1.0) + 1.5;
}

} // namespace schwlab
