#include "schwlab/evaluators.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

namespace schwlab {

namespace {

class ConstantEvaluator final : public HolomorphicEvaluator {
public:
    explicit ConstantEvaluator(Complex c) : c_(c) {}
    ComplexJet3 eval(Complex z) const override { return ComplexJet3::constant(c_, z); }
    Complex value(Complex) const override { return c_; }
    bool extends_to_closed_disk() const override { return true; }

private:
    Complex c_;
};

class IdentityEvaluator final : public HolomorphicEvaluator {
public:
    ComplexJet3 eval(Complex z) const override { return ComplexJet3::identity(z); }
    Complex value(Complex z) const override { return z; }
    bool extends_to_closed_disk() const override { return true; }
};

class PolynomialEvaluator final : public HolomorphicEvaluator {
public:
    explicit PolynomialEvaluator(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            coeffs_.push_back(0.0);
    }

    ComplexJet3 eval(Complex z) const override {
        // Repeated synthetic division: Taylor coefficients t0..t3 at z.
        Complex t0 = 0.0, t1 = 0.0, t2 = 0.0, t3 = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            t3 = t3 * z + t2;
            t2 = t2 * z + t1;
            t1 = t1 * z + t0;
            t0 = t0 * z + *it;
        }
        return {z, t0, t1, 2.0 * t2, 6.0 * t3};
    }

    Complex value(Complex z) const override {
        Complex acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * z + *it;
        return acc;
    }

    bool extends_to_closed_disk() const override { return true; }

private:
    std::vector<Complex> coeffs_;
};

class MobiusEvaluator final : public HolomorphicEvaluator {
public:
    explicit MobiusEvaluator(const MobiusTransform& m) : m_(m) {
        if (m_.determinant() == 0.0)
            throw DomainError("MobiusEvaluator: vanishing determinant");
        if (m_.pole_modulus() <= 1.0 + 1e-15)
            closed_ = false;
        if (m_.pole_modulus() < 1.0)
            throw DomainError("MobiusEvaluator: pole inside the open disk");
    }
    ComplexJet3 eval(Complex z) const override { return m_.jet(z); }
    Complex value(Complex z) const override { return m_.apply(z); }
    bool extends_to_closed_disk() const override { return closed_; }

private:
    MobiusTransform m_;
    bool closed_ = true;
};

class BlaschkeEvaluator final : public HolomorphicEvaluator {
public:
    BlaschkeEvaluator(std::vector<Complex> zeros, Complex eta)
        : zeros_(std::move(zeros)), eta_(eta) {
        for (Complex a : zeros_)
            if (std::abs(a) >= 1.0)
                throw DomainError("Blaschke zero outside the open disk");
        if (std::abs(std::abs(eta_) - 1.0) > 1e-12)
            throw DomainError("Blaschke factor must be unimodular");
    }

    ComplexJet3 eval(Complex z) const override {
        ComplexJet3 acc = ComplexJet3::constant(eta_, z);
        for (Complex a : zeros_) {
            const MobiusTransform factor{1.0, -a, -std::conj(a), 1.0};
            acc = jet_mul(acc, factor.jet(z));
        }
        return acc;
    }

    bool extends_to_closed_disk() const override { return true; }

private:
    std::vector<Complex> zeros_;
    Complex eta_;
};

class SumEvaluator final : public HolomorphicEvaluator {
public:
    SumEvaluator(EvaluatorPtr lhs, EvaluatorPtr rhs, double sign)
        : lhs_(std::move(lhs)), rhs_(std::move(rhs)), sign_(sign) {}
    ComplexJet3 eval(Complex z) const override {
        return jet_add(lhs_->eval(z), jet_scale(sign_, rhs_->eval(z)));
    }
    Complex value(Complex z) const override { return lhs_->value(z) + sign_ * rhs_->value(z); }
    std::pair<Complex, Complex> value_and_derivative(Complex z) const override {
        const auto [lv, ld] = lhs_->value_and_derivative(z);
        const auto [rv, rd] = rhs_->value_and_derivative(z);
        return {lv + sign_ * rv, ld + sign_ * rd};
    }
    bool extends_to_closed_disk() const override {
        return lhs_->extends_to_closed_disk() && rhs_->extends_to_closed_disk();
    }

private:
    EvaluatorPtr lhs_, rhs_;
    double sign_;
};

class ProductEvaluator final : public HolomorphicEvaluator {
public:
    ProductEvaluator(EvaluatorPtr lhs, EvaluatorPtr rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}
    ComplexJet3 eval(Complex z) const override { return jet_mul(lhs_->eval(z), rhs_->eval(z)); }
    Complex value(Complex z) const override { return lhs_->value(z) * rhs_->value(z); }
    bool extends_to_closed_disk() const override {
        return lhs_->extends_to_closed_disk() && rhs_->extends_to_closed_disk();
    }

private:
    EvaluatorPtr lhs_, rhs_;
};

class QuotientEvaluator final : public HolomorphicEvaluator {
public:
    QuotientEvaluator(EvaluatorPtr num, EvaluatorPtr den) : num_(std::move(num)), den_(std::move(den)) {}
    ComplexJet3 eval(Complex z) const override { return jet_div(num_->eval(z), den_->eval(z)); }
    Complex value(Complex z) const override {
        const Complex d = den_->value(z);
        if (d == 0.0)
            throw SingularEvaluation("quotient evaluator: zero denominator");
        return num_->value(z) / d;
    }
    // The denominator may vanish on the boundary; no continuity claim.
    bool extends_to_closed_disk() const override { return false; }

private:
    EvaluatorPtr num_, den_;
};

class ScaledEvaluator final : public HolomorphicEvaluator {
public:
    ScaledEvaluator(Complex k, EvaluatorPtr inner) : k_(k), inner_(std::move(inner)) {}
    ComplexJet3 eval(Complex z) const override { return jet_scale(k_, inner_->eval(z)); }
    Complex value(Complex z) const override { return k_ * inner_->value(z); }
    std::pair<Complex, Complex> value_and_derivative(Complex z) const override {
        const auto [v, d] = inner_->value_and_derivative(z);
        return {k_ * v, k_ * d};
    }
    bool extends_to_closed_disk() const override { return inner_->extends_to_closed_disk(); }

private:
    Complex k_;
    EvaluatorPtr inner_;
};

class CompositionEvaluator final : public HolomorphicEvaluator {
public:
    CompositionEvaluator(EvaluatorPtr outer, EvaluatorPtr inner)
        : outer_(std::move(outer)), inner_(std::move(inner)) {}
    ComplexJet3 eval(Complex z) const override {
        const ComplexJet3 gj = inner_->eval(z);
        return jet_compose(outer_->eval(gj.d0), gj);
    }
    Complex value(Complex z) const override { return outer_->value(inner_->value(z)); }
    bool extends_to_closed_disk() const override { return false; }

private:
    EvaluatorPtr outer_, inner_;
};

class LogEvaluator final : public HolomorphicEvaluator {
public:
    explicit LogEvaluator(EvaluatorPtr inner) : inner_(std::move(inner)) {}
    ComplexJet3 eval(Complex z) const override { return jet_log(inner_->eval(z)); }
    Complex value(Complex z) const override { return std::log(inner_->value(z)); }

private:
    EvaluatorPtr inner_;
};

class ExpEvaluator final : public HolomorphicEvaluator {
public:
    explicit ExpEvaluator(EvaluatorPtr inner) : inner_(std::move(inner)) {}
    ComplexJet3 eval(Complex z) const override { return jet_exp(inner_->eval(z)); }
    Complex value(Complex z) const override { return std::exp(inner_->value(z)); }
    bool extends_to_closed_disk() const override { return inner_->extends_to_closed_disk(); }

private:
    EvaluatorPtr inner_;
};

class PowerEvaluator final : public HolomorphicEvaluator {
public:
    PowerEvaluator(EvaluatorPtr inner, double alpha) : inner_(std::move(inner)), alpha_(alpha) {}
    ComplexJet3 eval(Complex z) const override { return jet_pow(inner_->eval(z), alpha_); }
    Complex value(Complex z) const override { return principal_pow(inner_->value(z), alpha_); }

private:
    EvaluatorPtr inner_;
    double alpha_;
};

// 12-point Gauss-Legendre nodes/weights on [-1, 1] (symmetric half listed).
constexpr std::array<double, 6> kGlNodes = {
    0.1252334085114689, 0.3678314989981802, 0.5873179542866175,
    0.7699026741943047, 0.9041172563704749, 0.9815606342467192};
constexpr std::array<double, 6> kGlWeights = {
    0.2491470458134028, 0.2334925365383548, 0.2031674267230659,
    0.1600783285433462, 0.1069393259953184, 0.0471753363865118};

class AntiderivativeEvaluator final : public HolomorphicEvaluator {
public:
    AntiderivativeEvaluator(EvaluatorPtr derivative, Complex base_point, Complex base_value)
        : derivative_(std::move(derivative)), base_point_(base_point), base_value_(base_value) {}

    ComplexJet3 eval(Complex z) const override {
        const ComplexJet3 dj = derivative_->eval(z);
        return {z, base_value_ + integrate(z), dj.d0, dj.d1, dj.d2};
    }

    Complex value(Complex z) const override { return base_value_ + integrate(z); }

    bool extends_to_closed_disk() const override { return derivative_->extends_to_closed_disk(); }

private:
    Complex panel_sum(Complex z, int panels) const {
        const Complex span = z - base_point_;
        Complex acc = 0.0;
        for (int p = 0; p < panels; ++p) {
            const double lo = static_cast<double>(p) / panels;
            const double hi = static_cast<double>(p + 1) / panels;
            const double mid = 0.5 * (lo + hi);
            const double half = 0.5 * (hi - lo);
            for (std::size_t i = 0; i < kGlNodes.size(); ++i) {
                const double tp = mid + half * kGlNodes[i];
                const double tm = mid - half * kGlNodes[i];
                acc += kGlWeights[i] * half *
                       (derivative_->value(base_point_ + tp * span) +
                        derivative_->value(base_point_ + tm * span));
            }
        }
        return acc * span;
    }

    Complex integrate(Complex z) const {
        if (z == base_point_)
            return 0.0;
        Complex prev = panel_sum(z, 1);
        for (int panels = 2; panels <= (1 << 14); panels *= 2) {
            const Complex cur = panel_sum(z, panels);
            if (std::abs(cur - prev) < 1e-12)
                return cur;
            prev = cur;
        }
        std::ostringstream msg;
        msg << "antiderivative quadrature did not converge at z = (" << z.real() << ", "
            << z.imag() << ")";
        throw NumericError(msg.str());
    }

    EvaluatorPtr derivative_;
    Complex base_point_;
    Complex base_value_;
};

// c * w^beta with the factor checked first, so vanishing derivative
// coefficients (integer alpha) never touch a singular power.
Complex pow_term(double c, Complex w, double beta) {
    if (c == 0.0)
        return 0.0;
    return c * principal_pow(w, beta);
}

// Jet of p(z) = (1-z)^a (inner derivative -1 folded in).
ComplexJet3 f_alpha_power_jet(Complex z, double a) {
    const Complex w = 1.0 - z;
    return {z,
            principal_pow(w, a),
            pow_term(-a, w, a - 1.0),
            pow_term(a * (a - 1.0), w, a - 2.0),
            pow_term(-a * (a - 1.0) * (a - 2.0), w, a - 3.0)};
}

// h_a(z) = (1 - (1-z)^a)/a. Continuous on the closed disk; 1-z stays in the
// closed right half-plane there, so the principal branch is safe.
class FAlphaH final : public HolomorphicEvaluator {
public:
    explicit FAlphaH(double alpha) : alpha_(alpha) {}

    ComplexJet3 eval(Complex z) const override {
        const ComplexJet3 p = f_alpha_power_jet(z, alpha_);
        const double inv = 1.0 / alpha_;
        return {z, (1.0 - p.d0) * inv, -p.d1 * inv, -p.d2 * inv, -p.d3 * inv};
    }

    Complex value(Complex z) const override {
        return (1.0 - principal_pow(1.0 - z, alpha_)) / alpha_;
    }

    std::pair<Complex, Complex> value_and_derivative(Complex z) const override {
        // h' = (1-z)^{a-1}, finite on the closed disk for a >= 1.
        return {value(z), principal_pow(1.0 - z, alpha_ - 1.0)};
    }

    bool extends_to_closed_disk() const override { return true; }

private:
    double alpha_;
};

// g_a(z) = (1 - (1 + a z)(1-z)^a)/(a(1+a)); g' = z (1-z)^{a-1}.
class FAlphaG final : public HolomorphicEvaluator {
public:
    explicit FAlphaG(double alpha) : alpha_(alpha) {}

    ComplexJet3 eval(Complex z) const override {
        const double a = alpha_;
        const ComplexJet3 p = f_alpha_power_jet(z, a);
        const ComplexJet3 lin{z, 1.0 + a * z, a, 0.0, 0.0};
        const ComplexJet3 prod = jet_mul(lin, p);
        const double inv = 1.0 / (a * (1.0 + a));
        return {z, (1.0 - prod.d0) * inv, -prod.d1 * inv, -prod.d2 * inv, -prod.d3 * inv};
    }

    Complex value(Complex z) const override {
        const Complex p = principal_pow(1.0 - z, alpha_);
        return (1.0 - (1.0 + alpha_ * z) * p) / (alpha_ * (1.0 + alpha_));
    }

    std::pair<Complex, Complex> value_and_derivative(Complex z) const override {
        return {value(z), z * principal_pow(1.0 - z, alpha_ - 1.0)};
    }

    bool extends_to_closed_disk() const override { return true; }

private:
    double alpha_;
};

class DerivativeEvaluator final : public HolomorphicEvaluator {
public:
    explicit DerivativeEvaluator(EvaluatorPtr f) : f_(std::move(f)) {}
    ComplexJet3 eval(Complex z) const override {
        const ComplexJet3 j = f_->eval(z);
        return {z, j.d1, j.d2, j.d3, 0.0};
    }

private:
    EvaluatorPtr f_;
};

class DerivativeQuotient final : public HolomorphicEvaluator {
public:
    DerivativeQuotient(EvaluatorPtr g, EvaluatorPtr h) : g_(std::move(g)), h_(std::move(h)) {}

    ComplexJet3 eval(Complex z) const override {
        const ComplexJet3 gj = g_->eval(z);
        const ComplexJet3 hj = h_->eval(z);
        if (hj.d1 == 0.0)
            throw SingularEvaluation("dilatation: h' vanishes");
        const Complex h1 = hj.d1, h2 = hj.d2, h3 = hj.d3;
        const Complex g1 = gj.d1, g2 = gj.d2, g3 = gj.d3;
        const Complex inv = 1.0 / h1;
        const Complex inv2 = inv * inv;
        const Complex w0 = g1 * inv;
        const Complex w1 = (g2 * h1 - g1 * h2) * inv2;
        const Complex w2 = (g3 * h1 * h1 - g1 * h3 * h1 - 2.0 * g2 * h2 * h1 + 2.0 * g1 * h2 * h2) * inv2 * inv;
        return {z, w0, w1, w2, 0.0};
    }

private:
    EvaluatorPtr g_, h_;
};

} // namespace

EvaluatorPtr make_constant(Complex c) { return std::make_shared<ConstantEvaluator>(c); }
EvaluatorPtr make_identity() { return std::make_shared<IdentityEvaluator>(); }

EvaluatorPtr make_polynomial(std::vector<Complex> coeffs) {
    return std::make_shared<PolynomialEvaluator>(std::move(coeffs));
}

EvaluatorPtr make_mobius_evaluator(const MobiusTransform& m) {
    return std::make_shared<MobiusEvaluator>(m);
}

EvaluatorPtr make_blaschke(std::vector<Complex> zeros, Complex eta) {
    return std::make_shared<BlaschkeEvaluator>(std::move(zeros), eta);
}

EvaluatorPtr make_sum(EvaluatorPtr lhs, EvaluatorPtr rhs) {
    return std::make_shared<SumEvaluator>(std::move(lhs), std::move(rhs), 1.0);
}

EvaluatorPtr make_difference(EvaluatorPtr lhs, EvaluatorPtr rhs) {
    return std::make_shared<SumEvaluator>(std::move(lhs), std::move(rhs), -1.0);
}

EvaluatorPtr make_product(EvaluatorPtr lhs, EvaluatorPtr rhs) {
    return std::make_shared<ProductEvaluator>(std::move(lhs), std::move(rhs));
}

EvaluatorPtr make_quotient(EvaluatorPtr num, EvaluatorPtr den) {
    return std::make_shared<QuotientEvaluator>(std::move(num), std::move(den));
}

EvaluatorPtr make_scaled(Complex k, EvaluatorPtr inner) {
    return std::make_shared<ScaledEvaluator>(k, std::move(inner));
}

EvaluatorPtr make_composition(EvaluatorPtr outer, EvaluatorPtr inner) {
    return std::make_shared<CompositionEvaluator>(std::move(outer), std::move(inner));
}

EvaluatorPtr make_log_of(EvaluatorPtr inner) { return std::make_shared<LogEvaluator>(std::move(inner)); }
EvaluatorPtr make_exp_of(EvaluatorPtr inner) { return std::make_shared<ExpEvaluator>(std::move(inner)); }

EvaluatorPtr make_power_of(EvaluatorPtr inner, double alpha) {
    return std::make_shared<PowerEvaluator>(std::move(inner), alpha);
}

EvaluatorPtr make_antiderivative(EvaluatorPtr derivative, Complex base_point, Complex base_value) {
    return std::make_shared<AntiderivativeEvaluator>(std::move(derivative), base_point, base_value);
}

EvaluatorPtr make_f_alpha_h(double alpha) {
    if (alpha <= 0.0)
        throw DomainError("f_alpha: alpha must be positive");
    return std::make_shared<FAlphaH>(alpha);
}

EvaluatorPtr make_f_alpha_g(double alpha) {
    if (alpha <= 0.0)
        throw DomainError("f_alpha: alpha must be positive");
    return std::make_shared<FAlphaG>(alpha);
}

EvaluatorPtr make_derivative_quotient(EvaluatorPtr g, EvaluatorPtr h) {
    return std::make_shared<DerivativeQuotient>(std::move(g), std::move(h));
}

EvaluatorPtr make_derivative_of(EvaluatorPtr f) {
    return std::make_shared<DerivativeEvaluator>(std::move(f));
}

} // namespace schwlab
