#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "schwlab/criteria.hpp"

#include "test_util.hpp"

using namespace schwlab;
using testutil::close;

TEST_CASE("lemma gap equality and slack cases") {
    Xoshiro256 rng(51);
    const auto id = make_identity();
    const auto c = make_constant(Complex(0.4, -0.3));
    for (int i = 0; i < 100; ++i) {
        const Complex z = rng.in_disk(0.95);
        CHECK(lemma_gap(*id, z) == 0.0);     // both sides vanish identically
        CHECK(close(lemma_gap(*c, z), -1.0, 1e-15));
    }
    // omega = z^2 at the origin: |1| - 1 = 0, the Schwarz-Pick equality case.
    CHECK(lemma_gap(*make_polynomial({0.0, 0.0, 1.0}), 0.0) == 0.0);

    CHECK_THROWS_AS(lemma_gap(*make_constant(2.0), 0.1), SensePreservationError);
}

TEST_CASE("lemma gap is nonpositive across random Blaschke products") {
    Xoshiro256 rng(52);
    double max_gap = -1e9;
    for (int b = 0; b < 20; ++b) {
        const auto omega = testutil::random_blaschke(rng, 4);
        for (int i = 0; i < 500; ++i)
            max_gap = std::max(max_gap, lemma_gap(*omega, rng.in_disk(0.95)));
    }
    CHECK(max_gap <= 1e-12);
}

TEST_CASE("thm3 is satisfied by harmonic Mobius maps on any grid") {
    Xoshiro256 rng(53);
    for (const GridSpec grid : {GridSpec{6, 16, 0.999}, GridSpec{10, 32, 1.0 - 1e-4}}) {
        const HarmonicMap f =
            harmonic_mobius(disk_automorphism(rng.in_disk(0.5)), rng.in_disk(0.7));
        const CriterionVerdict v = thm3_check(f, grid);
        CHECK(v.satisfied);
        CHECK(!v.inconclusive);
        CHECK(v.worst_margin >= -1e-12);
        CHECK(v.unverified == 0);
    }
}

TEST_CASE("thm3 is satisfied by constant-dilatation affine maps") {
    const HarmonicMap f = harmonic_from_parts(make_identity(), make_scaled(0.4, make_identity()));
    const CriterionVerdict v = thm3_check(f, GridSpec{8, 32, 0.999});
    CHECK(v.satisfied);
    CHECK(v.worst_margin >= -1e-12);
}

TEST_CASE("thm3 rejects f_1 with a witness beyond |z|^2 = 1/3") {
    const CriterionVerdict v = thm3_check(make_f_alpha(1.0), GridSpec{10, 32, 1.0 - 1e-4});
    CHECK(!v.satisfied);
    CHECK(!v.inconclusive);
    CHECK(v.worst_margin < 0.0);
    CHECK(std::norm(v.worst_point) > 1.0 / 3.0);
}

TEST_CASE("thm3 monotone consistency: refinement never flips to satisfied") {
    const HarmonicMap f1 = make_f_alpha(1.0);
    double prev_margin = 1e9;
    for (int levels : {4, 8, 12}) {
        const CriterionVerdict v = thm3_check(f1, GridSpec{levels, 32, 1.0 - 1e-4});
        CHECK(!v.satisfied);
        CHECK(v.worst_margin <= prev_margin);
        prev_margin = v.worst_margin;
    }
}

TEST_CASE("evaluation failures make a verdict inconclusive, never silently pass") {
    // h = z^2 fails at the origin sample.
    const HarmonicMap pinch =
        harmonic_from_parts(make_polynomial({0.0, 0.0, 1.0}), make_constant(0.0));
    const CriterionVerdict v = thm4_check(pinch, GridSpec{4, 16, 0.9});
    CHECK(v.inconclusive);
    CHECK(!v.satisfied);
    CHECK(v.unverified == 1);
}

TEST_CASE("Sh-decomposition residual vanishes exactly for holomorphic maps") {
    const HarmonicMap hol = holomorphic_map(make_polynomial({0.0, 1.0, 0.2, -0.1}));
    Xoshiro256 rng(54);
    for (int i = 0; i < 100; ++i)
        CHECK(sh_decomposition_residual(hol, rng.in_disk(0.9)) == 0.0);
}

TEST_CASE("Sh-decomposition residual is tiny for f_1 and random shears") {
    CHECK(sh_decomposition_residual(make_f_alpha(1.0), Complex(0.4, 0.2)) < 1e-10);

    Xoshiro256 rng(55);
    double worst = 0.0;
    for (int s = 0; s < 10; ++s) {
        const HarmonicMap f = testutil::random_shear(rng);
        for (int i = 0; i < 100; ++i)
            worst = std::max(worst, sh_decomposition_residual(f, rng.in_disk(0.95)));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("solve_c pins the root of 2x tan x = 1") {
    const double c = solve_c();
    CHECK(std::abs(2.0 * c * std::tan(c) - 1.0) < 1e-12);
    CHECK(std::abs(c - 0.6533) < 5e-4);
    CHECK(std::abs(2.0 * c * c - 0.8536) < 1e-3);
    CHECK(solve_c() == c); // deterministic
}

TEST_CASE("thm4: flat analytic part passes, h_2 fails near the boundary") {
    const HarmonicMap gentle = shear_from_analytic_part(
        make_polynomial({0.0, 1.0, 0.01}), make_blaschke({0.2}, 1.0));
    const CriterionVerdict pass = thm4_check(gentle, GridSpec{10, 32, 1.0 - 1e-4});
    CHECK(pass.satisfied);
    // Sh = -(3/2)(2e/(1+2ez))^2 for h = z + e z^2 stays far below the bound.
    CHECK(pass.worst_margin > 0.5);

    const HarmonicMap steep = shear_from_analytic_part(
        make_f_alpha_h(2.0), make_constant(0.0)); // h_2 = z - z^2/2
    const CriterionVerdict fail = thm4_check(steep, GridSpec{12, 32, 1.0 - 1e-4});
    CHECK(!fail.satisfied);
    CHECK(fail.worst_margin < 0.0);

    const HarmonicMap idmap = holomorphic_map(make_identity());
    CHECK(thm4_check(idmap, GridSpec{6, 16, 0.999}).satisfied);
}

TEST_CASE("affine invariance residuals") {
    const HarmonicMap f1 = make_f_alpha(1.0);
    const auto [s0, w0] = affine_invariance_residuals(f1, 0.0, Complex(0.2, 0.1));
    CHECK(s0 == 0.0);
    CHECK(w0 == 0.0);

    const auto [s1, w1] = affine_invariance_residuals(f1, 0.5, 0.3);
    CHECK(s1 < 1e-11);
    CHECK(w1 < 1e-11);

    Xoshiro256 rng(56);
    double worst_s = 0.0, worst_w = 0.0;
    for (int s = 0; s < 10; ++s) {
        const HarmonicMap f = testutil::random_shear(rng);
        for (int i = 0; i < 100; ++i) {
            const auto [ds, dw] =
                affine_invariance_residuals(f, rng.in_disk(0.8), rng.in_disk(0.95));
            worst_s = std::max(worst_s, ds);
            worst_w = std::max(worst_w, dw);
        }
    }
    CHECK(worst_s < 1e-10);
    CHECK(worst_w < 1e-10);
}
