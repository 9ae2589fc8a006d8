#pragma once

#include <complex>

#include "schwlab/errors.hpp"

namespace schwlab {

using Complex = std::complex<double>;

/// Value and first three complex derivatives of a holomorphic function at a
/// point of the disk. The workhorse of every Schwarzian evaluation: Pf needs
/// f''/f', Sf additionally needs f'''.
struct ComplexJet3 {
    Complex base_point{};
    Complex d0{}; // f(z)
    Complex d1{}; // f'(z)
    Complex d2{}; // f''(z)
    Complex d3{}; // f'''(z)

    static ComplexJet3 constant(Complex value, Complex at) { return {at, value, 0.0, 0.0, 0.0}; }
    static ComplexJet3 identity(Complex at) { return {at, at, 1.0, 0.0, 0.0}; }

    bool finite() const;
};

// Arithmetic. Both operands must share a base point; the result carries the
// derivatives of the combined function (Leibniz for mul, closed-form
// reciprocal for div, truncation at order 3 throughout).
ComplexJet3 jet_add(const ComplexJet3& a, const ComplexJet3& b);
ComplexJet3 jet_sub(const ComplexJet3& a, const ComplexJet3& b);
ComplexJet3 jet_mul(const ComplexJet3& a, const ComplexJet3& b);
ComplexJet3 jet_div(const ComplexJet3& a, const ComplexJet3& b);
ComplexJet3 jet_scale(Complex k, const ComplexJet3& a);
ComplexJet3 jet_reciprocal(const ComplexJet3& a);
ComplexJet3 jet_negate(const ComplexJet3& a);

/// Faa di Bruno to order 3. `outer` must be based at inner.d0.
ComplexJet3 jet_compose(const ComplexJet3& outer, const ComplexJet3& inner);

// Elementary outer functions, composed onto an inner jet. log and pow use the
// principal branch (arguments in (-pi, pi]); the inner value must stay off the
// closed negative real axis.
ComplexJet3 jet_exp(const ComplexJet3& w);
ComplexJet3 jet_log(const ComplexJet3& w);
ComplexJet3 jet_pow(const ComplexJet3& w, double alpha);

/// w^beta on the principal branch with the boundary conventions the map
/// families need: 0^beta = 0 for beta > 0 and 0^0 = 1. Negative powers of
/// zero and arguments on the open negative real axis are singular.
Complex principal_pow(Complex w, double beta);

inline ComplexJet3 operator+(const ComplexJet3& a, const ComplexJet3& b) { return jet_add(a, b); }
inline ComplexJet3 operator-(const ComplexJet3& a, const ComplexJet3& b) { return jet_sub(a, b); }
inline ComplexJet3 operator*(const ComplexJet3& a, const ComplexJet3& b) { return jet_mul(a, b); }
inline ComplexJet3 operator/(const ComplexJet3& a, const ComplexJet3& b) { return jet_div(a, b); }
inline ComplexJet3 operator*(Complex k, const ComplexJet3& a) { return jet_scale(k, a); }
inline ComplexJet3 operator-(const ComplexJet3& a) { return jet_negate(a); }

} // namespace schwlab
