#pragma once

// Test-side symbolic oracles, independent of the jet arithmetic they check:
// exact coefficient-level polynomial calculus and rational-function
// derivatives via the quotient rule.

#include <complex>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

struct Poly {
    std::vector<Complex> c; // c[k] z^k

    static Poly constant(Complex v) { return {{v}}; }
    static Poly identity() { return {{0.0, 1.0}}; }

    Complex eval(Complex z) const {
        Complex acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * z + *it;
        return acc;
    }

    Poly derivative() const {
        Poly d;
        for (std::size_t k = 1; k < c.size(); ++k)
            d.c.push_back(static_cast<double>(k) * c[k]);
        if (d.c.empty())
            d.c.push_back(0.0);
        return d;
    }
};

inline Poly add(const Poly& a, const Poly& b) {
    Poly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0.0);
    for (std::size_t k = 0; k < a.c.size(); ++k)
        out.c[k] += a.c[k];
    for (std::size_t k = 0; k < b.c.size(); ++k)
        out.c[k] += b.c[k];
    return out;
}

inline Poly sub(const Poly& a, const Poly& b) {
    Poly neg = b;
    for (auto& v : neg.c)
        v = -v;
    return add(a, neg);
}

inline Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] += a.c[i] * b.c[j];
    return out;
}

inline Poly compose(const Poly& outer, const Poly& inner) {
    Poly acc = Poly::constant(0.0);
    for (auto it = outer.c.rbegin(); it != outer.c.rend(); ++it)
        acc = add(mul(acc, inner), Poly::constant(*it));
    return acc;
}

/// f, f', f'', f''' of a polynomial at z, straight from the coefficients.
struct Derivs {
    Complex d0, d1, d2, d3;
};

inline Derivs derivatives(const Poly& p, Complex z) {
    const Poly d1 = p.derivative();
    const Poly d2 = d1.derivative();
    const Poly d3 = d2.derivative();
    return {p.eval(z), d1.eval(z), d2.eval(z), d3.eval(z)};
}

/// Rational function num/den^power with quotient-rule derivatives. Keeping
/// the denominator as a symbolic power (instead of squaring it) keeps the
/// numerator degree growth linear and the evaluation well conditioned.
struct Rational {
    Poly num, den;
    int power = 1;

    Rational derivative() const {
        Poly scaled = mul(num, den.derivative());
        for (auto& v : scaled.c)
            v *= static_cast<double>(power);
        return {sub(mul(num.derivative(), den), scaled), den, power + 1};
    }

    Complex eval(Complex z) const {
        const Complex d = den.eval(z);
        Complex dp = 1.0;
        for (int k = 0; k < power; ++k)
            dp *= d;
        return num.eval(z) / dp;
    }
};

inline Derivs derivatives(const Rational& r, Complex z) {
    const Rational d1 = r.derivative();
    const Rational d2 = d1.derivative();
    const Rational d3 = d2.derivative();
    return {r.eval(z), d1.eval(z), d2.eval(z), d3.eval(z)};
}

/// Schwarzian of a rational function at z, computed from oracle derivatives.
inline Complex schwarzian(const Rational& r, Complex z) {
    const Derivs d = derivatives(r, z);
    const Complex p = d.d2 / d.d1;
    return d.d3 / d.d1 - 1.5 * p * p;
}

} // namespace oracle
