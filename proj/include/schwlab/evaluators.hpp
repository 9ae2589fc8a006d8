#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "schwlab/jet.hpp"
#include "schwlab/mobius.hpp"

namespace schwlab {

/// Evaluation capability for a holomorphic function on the unit disk:
/// given z, produce the order-3 jet at z. Evaluators are immutable after
/// construction and safe to call from any number of threads; evaluation is
/// deterministic (same z, same bits).
class HolomorphicEvaluator {
public:
    virtual ~HolomorphicEvaluator() = default;

    virtual ComplexJet3 eval(Complex z) const = 0;

    /// Function value only. Kept separate so boundary sampling can avoid
    /// derivative singularities at closed-disk points.
    virtual Complex value(Complex z) const { return eval(z).d0; }

    /// Value and first derivative. The boundary tangent scan needs these at
    /// closed-disk points where higher derivatives may blow up.
    virtual std::pair<Complex, Complex> value_and_derivative(Complex z) const {
        const ComplexJet3 j = eval(z);
        return {j.d0, j.d1};
    }

    /// Whether evaluation extends continuously to the closed disk.
    virtual bool extends_to_closed_disk() const { return false; }
};

using EvaluatorPtr = std::shared_ptr<const HolomorphicEvaluator>;

// Concrete variants.
EvaluatorPtr make_constant(Complex c);
EvaluatorPtr make_identity();
EvaluatorPtr make_polynomial(std::vector<Complex> coeffs); // coeffs[k] z^k
EvaluatorPtr make_mobius_evaluator(const MobiusTransform& m);
EvaluatorPtr make_blaschke(std::vector<Complex> zeros, Complex eta);

// Combinators.
EvaluatorPtr make_sum(EvaluatorPtr lhs, EvaluatorPtr rhs);
EvaluatorPtr make_difference(EvaluatorPtr lhs, EvaluatorPtr rhs);
EvaluatorPtr make_product(EvaluatorPtr lhs, EvaluatorPtr rhs);
EvaluatorPtr make_quotient(EvaluatorPtr num, EvaluatorPtr den);
EvaluatorPtr make_scaled(Complex k, EvaluatorPtr inner);
EvaluatorPtr make_composition(EvaluatorPtr outer, EvaluatorPtr inner);
EvaluatorPtr make_log_of(EvaluatorPtr inner);
EvaluatorPtr make_exp_of(EvaluatorPtr inner);
EvaluatorPtr make_power_of(EvaluatorPtr inner, double alpha);

/// Antiderivative of `derivative` along the straight segment [base_point, z],
/// pinned to base_value at base_point. Composite Gauss-Legendre, panel count
/// doubled until successive estimates differ by < 1e-12 (cap 2^14 panels);
/// non-convergence raises NumericError naming the offending z.
EvaluatorPtr make_antiderivative(EvaluatorPtr derivative, Complex base_point, Complex base_value);

// Components of the extremal family: h_a(z) = (1 - (1-z)^a)/a and
// g_a(z) = (1 - (1 + a z)(1-z)^a)/(a(1+a)). Both extend continuously to the
// closed disk; jets at z = 1 use the one-sided limit conventions of
// principal_pow.
EvaluatorPtr make_f_alpha_h(double alpha);
EvaluatorPtr make_f_alpha_g(double alpha);

/// Jet of g'/h' (valid through order 2; d3 is identically zero). Used to
/// derive a dilatation when no explicit evaluator is known.
EvaluatorPtr make_derivative_quotient(EvaluatorPtr g, EvaluatorPtr h);

/// Jet of f' obtained by shifting the jet of f down one order (valid through
/// order 2; d3 is identically zero).
EvaluatorPtr make_derivative_of(EvaluatorPtr f);

} // namespace schwlab
