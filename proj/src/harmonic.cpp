#include "schwlab/harmonic.hpp"

#include <cmath>

namespace schwlab {

Complex HarmonicMap::eval(Complex z) const { return h->value(z) + std::conj(g->value(z)); }

ComplexJet3 HarmonicMap::h_jet(Complex z) const {
    ComplexJet3 j = h->eval(z);
    if (j.d1 == 0.0)
        throw SingularEvaluation("harmonic map: h' vanishes (local univalence lost)");
    return j;
}

ComplexJet3 HarmonicMap::omega_jet(Complex z) const {
    ComplexJet3 j = omega->eval(z);
    if (std::abs(j.d0) >= 1.0)
        throw SensePreservationError("harmonic map: |omega(z)| >= 1");
    return j;
}

bool HarmonicMap::extends_to_closed_disk() const {
    return h->extends_to_closed_disk() && g->extends_to_closed_disk();
}

HarmonicMap make_f_alpha(double alpha) {
    if (alpha <= 0.0)
        throw DomainError("make_f_alpha: alpha must be positive");
    HarmonicMap f;
    f.h = make_f_alpha_h(alpha);
    f.g = make_f_alpha_g(alpha);
    f.omega = make_identity();
    f.f_alpha = alpha;
    return f;
}

HarmonicMap shear(EvaluatorPtr F, EvaluatorPtr omega, Complex base_value) {
    // h' = F'/(1 - omega): build it as an explicit evaluator so both
    // antiderivatives integrate closed-form integrands.
    EvaluatorPtr one_minus_omega = make_difference(make_constant(1.0), omega);
    EvaluatorPtr h_prime = make_quotient(make_derivative_of(F), one_minus_omega);

    const Complex h0 = F->value(0.0) + base_value;
    HarmonicMap f;
    f.h = make_antiderivative(h_prime, 0.0, h0);
    f.g = make_antiderivative(make_product(omega, h_prime), 0.0, base_value);
    f.omega = omega;
    return f;
}

HarmonicMap shear_from_analytic_part(EvaluatorPtr h, EvaluatorPtr omega, Complex base_value) {
    HarmonicMap f;
    f.g = make_antiderivative(make_product(omega, make_derivative_of(h)), 0.0, base_value);
    f.h = std::move(h);
    f.omega = std::move(omega);
    return f;
}

HarmonicMap harmonic_mobius(const MobiusTransform& m, Complex c) {
    if (!m.pole_outside_closed_disk())
        throw DomainError("harmonic_mobius: Mobius pole inside the closed disk");
    if (std::abs(c) >= 1.0)
        throw DomainError("harmonic_mobius: |c| must be < 1");
    HarmonicMap f;
    f.h = make_mobius_evaluator(m);
    f.g = make_scaled(c, f.h);
    f.omega = make_constant(c);
    return f;
}

HarmonicMap affine_transform(const HarmonicMap& f, Complex a) {
    if (std::abs(a) >= 1.0)
        throw DomainError("affine_transform: |a| must be < 1");
    HarmonicMap out;
    out.h = make_sum(f.h, make_scaled(a, f.g));
    out.g = make_sum(f.g, make_scaled(std::conj(a), f.h));
    // omega_F = (omega + conj(a))/(1 + a omega), a Mobius map of omega.
    const MobiusTransform affine_dilatation{1.0, std::conj(a), a, 1.0};
    out.omega = make_composition(make_mobius_evaluator(affine_dilatation), f.omega);
    return out;
}

HarmonicMap harmonic_from_parts(EvaluatorPtr h, EvaluatorPtr g) {
    HarmonicMap f;
    f.omega = make_derivative_quotient(g, h);
    f.h = std::move(h);
    f.g = std::move(g);
    return f;
}

HarmonicMap holomorphic_map(EvaluatorPtr h) {
    HarmonicMap f;
    f.h = std::move(h);
    f.g = make_constant(0.0);
    f.omega = make_constant(0.0);
    return f;
}

Complex eval_harmonic(const HarmonicMap& f, Complex z) {
    const double r = std::abs(z);
    const bool inside = r < 1.0 || (r <= 1.0 && f.extends_to_closed_disk());
    if (!inside)
        throw DomainError("eval_harmonic: point outside the map's domain");
    return f.eval(z);
}

} // namespace schwlab
