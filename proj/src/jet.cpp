#include "schwlab/jet.hpp"

#include <cmath>

namespace schwlab {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_base(const ComplexJet3& a, const ComplexJet3& b) {
    if (a.base_point != b.base_point)
        throw UsageError("jet arithmetic requires a common base point");
}

// Closed negative real axis, including 0: the principal branch is either
// discontinuous or undefined there.
bool on_branch_cut(Complex w) { return w.imag() == 0.0 && w.real() <= 0.0; }

} // namespace

bool ComplexJet3::finite() const {
    return schwlab::finite(d0) && schwlab::finite(d1) && schwlab::finite(d2) && schwlab::finite(d3);
}

ComplexJet3 jet_add(const ComplexJet3& a, const ComplexJet3& b) {
    require_same_base(a, b);
    return {a.base_point, a.d0 + b.d0, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}

ComplexJet3 jet_sub(const ComplexJet3& a, const ComplexJet3& b) {
    require_same_base(a, b);
    return {a.base_point, a.d0 - b.d0, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}

ComplexJet3 jet_mul(const ComplexJet3& a, const ComplexJet3& b) {
    require_same_base(a, b);
    return {a.base_point,
            a.d0 * b.d0,
            a.d1 * b.d0 + a.d0 * b.d1,
            a.d2 * b.d0 + 2.0 * a.d1 * b.d1 + a.d0 * b.d2,
            a.d3 * b.d0 + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.d0 * b.d3};
}

ComplexJet3 jet_reciprocal(const ComplexJet3& a) {
    if (a.d0 == 0.0)
        throw SingularEvaluation("reciprocal of a jet with zero value");
    const Complex inv = 1.0 / a.d0;
    const Complex inv2 = inv * inv;
    const Complex inv3 = inv2 * inv;
    const Complex inv4 = inv2 * inv2;
    return {a.base_point,
            inv,
            -a.d1 * inv2,
            2.0 * a.d1 * a.d1 * inv3 - a.d2 * inv2,
            -6.0 * a.d1 * a.d1 * a.d1 * inv4 + 6.0 * a.d1 * a.d2 * inv3 - a.d3 * inv2};
}

ComplexJet3 jet_div(const ComplexJet3& a, const ComplexJet3& b) {
    require_same_base(a, b);
    return jet_mul(a, jet_reciprocal(b));
}

ComplexJet3 jet_scale(Complex k, const ComplexJet3& a) {
    return {a.base_point, k * a.d0, k * a.d1, k * a.d2, k * a.d3};
}

ComplexJet3 jet_negate(const ComplexJet3& a) {
    return {a.base_point, -a.d0, -a.d1, -a.d2, -a.d3};
}

ComplexJet3 jet_compose(const ComplexJet3& outer, const ComplexJet3& inner) {
    if (outer.base_point != inner.d0)
        throw UsageError("jet_compose: outer jet must be based at the inner value");
    const Complex g1 = inner.d1, g2 = inner.d2, g3 = inner.d3;
    return {inner.base_point,
            outer.d0,
            outer.d1 * g1,
            outer.d2 * g1 * g1 + outer.d1 * g2,
            outer.d3 * g1 * g1 * g1 + 3.0 * outer.d2 * g1 * g2 + outer.d1 * g3};
}

ComplexJet3 jet_exp(const ComplexJet3& w) {
    const Complex e = std::exp(w.d0);
    return jet_compose({w.d0, e, e, e, e}, w);
}

ComplexJet3 jet_log(const ComplexJet3& w) {
    if (on_branch_cut(w.d0))
        throw SingularEvaluation("jet_log: value on the closed negative real axis");
    const Complex inv = 1.0 / w.d0;
    const Complex inv2 = inv * inv;
    return jet_compose({w.d0, std::log(w.d0), inv, -inv2, 2.0 * inv2 * inv}, w);
}

ComplexJet3 jet_pow(const ComplexJet3& w, double alpha) {
    if (alpha == 0.0)
        return ComplexJet3::constant(1.0, w.base_point);
    if (alpha == 1.0)
        return w;
    if (on_branch_cut(w.d0))
        throw SingularEvaluation("jet_pow: value on the closed negative real axis");
    const Complex p0 = std::pow(w.d0, alpha);
    const Complex inv = 1.0 / w.d0;
    const double c1 = alpha;
    const double c2 = alpha * (alpha - 1.0);
    const double c3 = c2 * (alpha - 2.0);
    const Complex p1 = c1 * p0 * inv;
    const Complex p2 = c2 * p0 * inv * inv;
    const Complex p3 = c3 * p0 * inv * inv * inv;
    return jet_compose({w.d0, p0, p1, p2, p3}, w);
}

Complex principal_pow(Complex w, double beta) {
    if (beta == 0.0)
        return 1.0;
    if (w == 0.0) {
        if (beta > 0.0)
            return 0.0;
        throw SingularEvaluation("principal_pow: negative power of zero");
    }
    if (w.imag() == 0.0 && w.real() < 0.0)
        throw SingularEvaluation("principal_pow: argument on the negative real axis");
    return std::pow(w, beta);
}

} // namespace schwlab
