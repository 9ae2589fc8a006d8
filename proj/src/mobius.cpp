#include "schwlab/mobius.hpp"

#include <cmath>
#include <limits>

namespace schwlab {

Complex MobiusTransform::apply(Complex z) const {
    const Complex den = c * z + d;
    if (den == 0.0)
        throw SingularEvaluation("MobiusTransform: evaluation at the pole");
    return (a * z + b) / den;
}

ComplexJet3 MobiusTransform::jet(Complex z) const {
    const Complex den = c * z + d;
    if (den == 0.0)
        throw SingularEvaluation("MobiusTransform: evaluation at the pole");
    const Complex det = determinant();
    const Complex inv = 1.0 / den;
    const Complex inv2 = inv * inv;
    return {z,
            (a * z + b) * inv,
            det * inv2,
            -2.0 * c * det * inv2 * inv,
            6.0 * c * c * det * inv2 * inv2};
}

double MobiusTransform::pole_modulus() const {
    if (c == 0.0)
        return std::numeric_limits<double>::infinity();
    return std::abs(d / c);
}

MobiusTransform make_mobius_checked(Complex a, Complex b, Complex c, Complex d) {
    MobiusTransform m{a, b, c, d};
    if (m.determinant() == 0.0)
        throw DomainError("MobiusTransform: vanishing determinant");
    return m;
}

MobiusTransform compose(const MobiusTransform& lhs, const MobiusTransform& rhs) {
    return {lhs.a * rhs.a + lhs.b * rhs.c,
            lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c,
            lhs.c * rhs.b + lhs.d * rhs.d};
}

MobiusTransform disk_automorphism(Complex a) {
    if (std::abs(a) >= 1.0)
        throw DomainError("disk_automorphism: |a| must be < 1");
    return {1.0, a, std::conj(a), 1.0};
}

MobiusTransform normalizing_automorphism(Complex p) {
    if (std::abs(p) >= 1.0)
        throw DomainError("normalizing_automorphism: |p| must be < 1");
    const Complex k = (1.0 - std::conj(p)) / (1.0 - p);
    return {k, -k * p, -std::conj(p), 1.0};
}

MobiusTransform scaling_map(Complex z0, double x) {
    const double r0 = std::abs(z0);
    if (z0 == 0.0 || r0 >= 1.0)
        throw DomainError("scaling_map: z0 must satisfy 0 < |z0| < 1");
    if (x <= 0.0 || x > r0)
        throw DomainError("scaling_map: x must lie in (0, |z0|]");
    // e^{-i theta0} x / r0 = conj(z0)/r0 * x/r0
    const Complex factor = std::conj(z0) * (x / (r0 * r0));
    return {factor, 0.0, 0.0, 1.0};
}

} // namespace schwlab
