#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "schwlab/geometry.hpp"
#include "schwlab/svg.hpp"

#include "test_util.hpp"

using namespace schwlab;
using testutil::close;

namespace {
constexpr double kPi = 3.14159265358979323846;

double circular_distance(double a, double b) {
    const double d = std::fmod(std::abs(a - b), 2.0 * kPi);
    return std::min(d, 2.0 * kPi - d);
}
} // namespace

TEST_CASE("Jacobian frozen values") {
    const HarmonicMap id = holomorphic_map(make_identity());
    CHECK(close(jacobian(id, Complex(0.3, 0.4)), 1.0, 1e-15));

    const HarmonicMap f1 = make_f_alpha(1.0);
    CHECK(close(jacobian(f1, 0.6), 0.64, 1e-14));

    const HarmonicMap hm = harmonic_mobius(MobiusTransform::identity(), 0.5);
    CHECK(close(jacobian(hm, Complex(0.1, -0.7)), 0.75, 1e-15));

    CHECK_THROWS_AS(jacobian(id, Complex(1.0, 0.5)), DomainError);
}

TEST_CASE("Jacobian of the family matches |1-z|^{2(alpha-1)}(1-|z|^2)") {
    Xoshiro256 rng(61);
    for (double alpha : {1.0, 1.5, 2.0}) {
        const HarmonicMap f = make_f_alpha(alpha);
        for (int i = 0; i < 300; ++i) {
            const Complex z = rng.in_disk(0.97);
            const double want =
                std::pow(std::abs(1.0 - z), 2.0 * (alpha - 1.0)) * (1.0 - std::norm(z));
            CHECK(close(jacobian(f, z), want, 1e-12 * std::max(1.0, want)));
            CHECK(jacobian(f, z) > 0.0);
        }
    }
}

TEST_CASE("scan preconditions") {
    const HarmonicMap id = holomorphic_map(make_identity());
    CHECK_THROWS_AS(injectivity_scan(id, 16, 0.05), DomainError);
    CHECK_THROWS_AS(injectivity_scan(id, 64, 0.0), DomainError);
    CHECK_THROWS_AS(injectivity_scan(id, 64, 1.0), DomainError);
}

TEST_CASE("scan: the identity has no colliding cells") {
    // At resolution 400 the image cells are far smaller than the separation
    // floor, so an isometry produces no candidate pairs at all.
    const InjectivityReport r = injectivity_scan(holomorphic_map(make_identity()), 400, 0.05);
    CHECK(r.verdict == ScanVerdict::no_collision_at_resolution);
    CHECK(!r.witness.has_value());
    CHECK(r.candidates_examined == 0);
}

TEST_CASE("scan: f_1 shows no collision, f_1.5 yields a verified witness") {
    const InjectivityReport clean = injectivity_scan(make_f_alpha(1.0), 128, 0.05);
    CHECK(clean.verdict == ScanVerdict::no_collision_at_resolution);

    const InjectivityReport hit = injectivity_scan(make_f_alpha(1.5), 128, 0.05);
    CHECK(hit.verdict == ScanVerdict::collision_found);
    REQUIRE(hit.witness.has_value());
    const CollisionWitness w = *hit.witness;
    CHECK(w.image_gap < 1e-10);
    CHECK(w.preimage_gap >= 0.05);
    CHECK(std::abs(w.z1) < 1.0);
    CHECK(std::abs(w.z2) < 1.0);
    // Re-verify the collision through eval_harmonic, outside the scan path.
    const HarmonicMap f = make_f_alpha(1.5);
    CHECK(std::abs(eval_harmonic(f, w.z1) - eval_harmonic(f, w.z2)) < 1e-10);
}

TEST_CASE("scan is deterministic") {
    const InjectivityReport a = injectivity_scan(make_f_alpha(1.5), 96, 0.05);
    const InjectivityReport b = injectivity_scan(make_f_alpha(1.5), 96, 0.05);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(a.witness->z1 == b.witness->z1);
    CHECK(a.witness->z2 == b.witness->z2);
    CHECK(a.candidates_examined == b.candidates_examined);
}

TEST_CASE("boundary curve sampling") {
    const HarmonicMap id = holomorphic_map(make_identity());
    const BoundaryCurve circle = boundary_curve(id, 256);
    CHECK(circle.points.size() == 256);
    for (std::size_t j = 0; j < circle.points.size(); ++j) {
        CHECK(close(circle.points[j], std::polar(1.0, circle.theta[j]), 1e-14));
        if (j > 0)
            CHECK(circle.theta[j] > circle.theta[j - 1]);
    }

    const BoundaryCurve f1 = boundary_curve(make_f_alpha(1.0), 256);
    CHECK(close(f1.points[0], 1.5, 1e-14)); // f_1(1) = 1 + 1/2

    // theta -> e^{i theta} + e^{-2 i theta}/2 at a generic sample
    const double theta = f1.theta[37];
    CHECK(close(f1.points[37], std::polar(1.0, theta) + 0.5 * std::polar(1.0, -2.0 * theta), 1e-13));

    const HarmonicMap koebe = holomorphic_map(
        make_quotient(make_polynomial({0.0, 1.0}), make_polynomial({1.0, -2.0, 1.0})));
    CHECK_THROWS_AS(boundary_curve(koebe, 256), DomainError); // no closed-disk flag
    CHECK_THROWS_AS(boundary_curve(id, 32), DomainError);
}

TEST_CASE("self-intersections: circle and f_1 are simple, f_1.5 crosses itself") {
    const SelfIntersections none =
        self_intersections(boundary_curve(holomorphic_map(make_identity()), 1024));
    CHECK(none.crossings.empty());
    CHECK(none.degenerate.empty());

    const SelfIntersections f1 = self_intersections(boundary_curve(make_f_alpha(1.0), 4096));
    CHECK(f1.crossings.empty());

    const SelfIntersections f15 = self_intersections(boundary_curve(make_f_alpha(1.5), 4096));
    CHECK(f15.crossings.size() >= 1);
}

TEST_CASE("crossing set is stable under doubling the sampling") {
    const SelfIntersections coarse = self_intersections(boundary_curve(make_f_alpha(1.5), 4096));
    const SelfIntersections fine = self_intersections(boundary_curve(make_f_alpha(1.5), 8192));
    REQUIRE(coarse.crossings.size() == fine.crossings.size());
    for (const Crossing& c : coarse.crossings) {
        double best = 1e9;
        for (const Crossing& d : fine.crossings)
            best = std::min(best, std::abs(c.point - d.point));
        CHECK(best < 1e-6);
    }

    const SelfIntersections c1 = self_intersections(boundary_curve(make_f_alpha(1.0), 4096));
    const SelfIntersections c2 = self_intersections(boundary_curve(make_f_alpha(1.0), 8192));
    CHECK(c1.crossings.empty());
    CHECK(c2.crossings.empty());
}

TEST_CASE("overlapping collinear segments are reported as degenerate, not crossings") {
    // A hand-built closed polyline whose segments 0 and 3 retrace the x-axis.
    BoundaryCurve curve;
    curve.theta = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
    curve.points = {Complex(0.0, 0.0),  Complex(1.0, 0.0), Complex(1.0, 1.0),
                    Complex(1.5, 0.0), Complex(0.5, 0.0), Complex(0.0, 1.0)};
    const SelfIntersections si = self_intersections(curve);
    bool found = false;
    for (const auto& [i, j] : si.degenerate)
        found = found || (i == 0 && j == 3);
    CHECK(found);
}

TEST_CASE("cusp candidates: identity has none, f_1 has exactly three") {
    CHECK(cusp_candidates(holomorphic_map(make_identity()), 1024, 0.05).empty());

    const std::vector<double> cusps = cusp_candidates(make_f_alpha(1.0), 4096, 0.05);
    REQUIRE(cusps.size() == 3);
    CHECK(circular_distance(cusps[0], 0.0) < 1e-6);
    CHECK(circular_distance(cusps[1], 2.0 * kPi / 3.0) < 1e-6);
    CHECK(circular_distance(cusps[2], 4.0 * kPi / 3.0) < 1e-6);

    // f_1.5: the count is reported by the detector; speed vanishes at
    // theta = 0 (h' -> 0) and where the tangent phases cancel.
    const std::vector<double> c15 = cusp_candidates(make_f_alpha(1.5), 4096, 0.05);
    CHECK(c15.size() == 5);

    CHECK_THROWS_AS(cusp_candidates(make_f_alpha(1.0), 128, 0.05), DomainError);
}

TEST_CASE("SVG rendering: margin rule, markers, and byte stability") {
    const BoundaryCurve circle = boundary_curve(holomorphic_map(make_identity()), 512);
    const std::string svg = render_svg({circle}, {}, {});
    CHECK(svg.find("viewBox=\"-1.050000 -1.050000 2.100000 2.100000\"") != std::string::npos);
    CHECK(svg.find("<path") != std::string::npos);

    const std::string again = render_svg({circle}, {}, {});
    CHECK(svg == again);

    const std::string marked =
        render_svg({circle}, {Complex(0.5, 0.5)}, {Complex(-0.5, -0.5), Complex(0.0, 0.0)});
    CHECK(marked.find("<circle") != std::string::npos);

    CHECK_THROWS_AS(render_svg({}, {}, {}), DomainError);
}
