#include "schwlab/suites.hpp"

#include <cmath>

namespace schwlab {

namespace {
constexpr double kTwoPi = 6.283185307179586;
}

EvaluatorPtr random_blaschke(Xoshiro256& rng, int max_degree) {
    const int degree = 1 + static_cast<int>(rng.next_u64() % static_cast<unsigned>(max_degree));
    std::vector<Complex> zeros;
    zeros.reserve(static_cast<std::size_t>(degree));
    for (int k = 0; k < degree; ++k)
        zeros.push_back(rng.in_disk(0.6));
    return make_blaschke(std::move(zeros), std::polar(1.0, rng.uniform(0.0, kTwoPi)));
}

std::vector<Complex> random_locally_univalent_poly(Xoshiro256& rng, int max_degree) {
    const int m = static_cast<int>(rng.next_u64() % static_cast<unsigned>(max_degree));
    // h' = c0 prod_k (1 - z / w_k) with |w_k| >= 2.
    std::vector<Complex> dcoeffs{Complex(rng.uniform(0.5, 1.5), rng.uniform(-0.5, 0.5))};
    for (int k = 0; k < m; ++k) {
        const Complex w = std::polar(rng.uniform(2.0, 4.0), rng.uniform(0.0, kTwoPi));
        std::vector<Complex> next(dcoeffs.size() + 1, 0.0);
        for (std::size_t i = 0; i < dcoeffs.size(); ++i) {
            next[i] += dcoeffs[i];
            next[i + 1] -= dcoeffs[i] / w;
        }
        dcoeffs = std::move(next);
    }
    std::vector<Complex> coeffs(dcoeffs.size() + 1);
    coeffs[0] = Complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
    for (std::size_t i = 0; i < dcoeffs.size(); ++i)
        coeffs[i + 1] = dcoeffs[i] / static_cast<double>(i + 1);
    return coeffs;
}

HarmonicMap random_shear(Xoshiro256& rng) {
    return shear_from_analytic_part(make_polynomial(random_locally_univalent_poly(rng, 4)),
                                    random_blaschke(rng, 2));
}

} // namespace schwlab
