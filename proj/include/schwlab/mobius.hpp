#pragma once

#include "schwlab/jet.hpp"

namespace schwlab {

/// z -> (az + b)/(cz + d) with ad - bc != 0, acting on the Riemann sphere.
/// Composition corresponds to the 2x2 coefficient-matrix product.
struct MobiusTransform {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    Complex determinant() const { return a * d - b * c; }
    Complex apply(Complex z) const;
    ComplexJet3 jet(Complex z) const;
    MobiusTransform inverse() const { return {d, -b, -c, a}; }

    /// Location of the pole -d/c; infinite modulus when c == 0.
    double pole_modulus() const;
    bool pole_outside_closed_disk() const { return pole_modulus() > 1.0; }

    static MobiusTransform identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

MobiusTransform make_mobius_checked(Complex a, Complex b, Complex c, Complex d);

/// Matrix product: (lhs o rhs)(z) = lhs(rhs(z)).
MobiusTransform compose(const MobiusTransform& lhs, const MobiusTransform& rhs);

/// phi_a(z) = (a + z)/(1 + conj(a) z): automorphism of the disk with
/// phi_a(0) = a and phi_a(-a) = 0. Requires |a| < 1.
MobiusTransform disk_automorphism(Complex a);

/// z -> ((1 - conj(p))/(1 - p)) (z - p)/(1 - conj(p) z): sends p to 0 and
/// fixes the boundary point 1. Requires |p| < 1.
MobiusTransform normalizing_automorphism(Complex p);

/// psi(z) = e^{-i theta0} (x/r0) z for z0 = r0 e^{i theta0}: fixes the origin
/// and sends z0 to x. Requires 0 < x <= |z0| < 1.
MobiusTransform scaling_map(Complex z0, double x);

} // namespace schwlab
