#include "schwlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "schwlab/parallel.hpp"

namespace schwlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kScanRadiusCap = 1.0 - 1e-3;
constexpr double kImageGapTol = 1e-10;
constexpr double kNewtonTarget = 1e-13;

std::int64_t cell_key(std::int64_t cx, std::int64_t cy) { return (cx << 32) ^ (cy & 0xffffffff); }

struct RealJacobian {
    // Columns of the 2x2 real derivative of f = h + conj(g): d/dx and d/dy.
    Complex fx, fy;
};

RealJacobian real_jacobian(const HarmonicMap& f, Complex z) {
    const Complex hp = f.h->eval(z).d1;
    const Complex gp = f.g->eval(z).d1;
    return {hp + std::conj(gp), Complex(0.0, 1.0) * (hp - std::conj(gp))};
}

// Fresh evaluation of the witness postconditions, independent of however the
// refinement arrived at the pair.
std::optional<CollisionWitness> verify_witness(const HarmonicMap& f, Complex z1, Complex z2,
                                               double delta) {
    if (std::abs(z1) >= 1.0 || std::abs(z2) >= 1.0)
        return std::nullopt;
    const Complex w1 = f.eval(z1);
    const Complex w2 = f.eval(z2);
    CollisionWitness w;
    w.z1 = z1;
    w.z2 = z2;
    w.image_gap = std::abs(w1 - w2);
    w.preimage_gap = std::abs(z1 - z2);
    if (!(w.image_gap < kImageGapTol) || !(w.preimage_gap >= delta))
        return std::nullopt;
    return w;
}

// Damped Newton for f(z2) = target with z1 frozen. Returns the refined z2 on
// convergence.
std::optional<Complex> newton_refine(const HarmonicMap& f, Complex target, Complex z2) {
    double residual = std::abs(f.eval(z2) - target);
    for (int iter = 0; iter < 60; ++iter) {
        if (residual < kNewtonTarget)
            return z2;
        const RealJacobian rj = real_jacobian(f, z2);
        const Complex fval = f.eval(z2) - target;
        const double a = rj.fx.real(), b = rj.fy.real();
        const double c = rj.fx.imag(), d = rj.fy.imag();
        const double det = a * d - b * c;
        const double scale = std::norm(rj.fx) + std::norm(rj.fy);
        if (std::abs(det) <= 1e-14 * scale)
            return std::nullopt; // leave it to the descent fallback
        const double dx = (-fval.real() * d + fval.imag() * b) / det;
        const double dy = (-fval.imag() * a + fval.real() * c) / det;
        bool stepped = false;
        double lambda = 1.0;
        for (int bt = 0; bt < 14; ++bt, lambda *= 0.5) {
            Complex cand = z2 + lambda * Complex(dx, dy);
            const double r = std::abs(cand);
            if (r >= 1.0 - 1e-9)
                cand *= (1.0 - 1e-9) / r;
            const double res = std::abs(f.eval(cand) - target);
            if (res < residual) {
                z2 = cand;
                residual = res;
                stepped = true;
                break;
            }
        }
        if (!stepped)
            return std::nullopt;
    }
    return residual < kNewtonTarget ? std::optional<Complex>(z2) : std::nullopt;
}

// Joint least-squares descent on |f(z1) - f(z2)|^2 with a delta-separation
// penalty; fallback for candidates where the frozen-z1 system is singular.
std::optional<std::pair<Complex, Complex>> descent_refine(const HarmonicMap& f, Complex z1,
                                                          Complex z2, double delta) {
    const double kappa = 1.0;
    auto objective = [&](Complex p, Complex q) {
        const double gap = std::abs(p - q);
        const double pen = std::max(0.0, delta - gap);
        return std::norm(f.eval(p) - f.eval(q)) + kappa * pen * pen;
    };
    double value = objective(z1, z2);
    double step = 0.1;
    for (int iter = 0; iter < 300 && value > 1e-26; ++iter) {
        const Complex diff = f.eval(z1) - f.eval(z2);
        const RealJacobian j1 = real_jacobian(f, z1);
        const RealJacobian j2 = real_jacobian(f, z2);
        const Complex sep = z1 - z2;
        const double gap = std::abs(sep);
        const double pen = std::max(0.0, delta - gap);
        const Complex unit = gap > 0.0 ? sep / gap : Complex(1.0, 0.0);
        // Gradient of the objective in the four real coordinates.
        double g1x = 2.0 * (std::conj(diff) * j1.fx).real();
        double g1y = 2.0 * (std::conj(diff) * j1.fy).real();
        double g2x = -2.0 * (std::conj(diff) * j2.fx).real();
        double g2y = -2.0 * (std::conj(diff) * j2.fy).real();
        if (pen > 0.0) {
            g1x += -2.0 * kappa * pen * unit.real();
            g1y += -2.0 * kappa * pen * unit.imag();
            g2x += 2.0 * kappa * pen * unit.real();
            g2y += 2.0 * kappa * pen * unit.imag();
        }
        const double gnorm = std::sqrt(g1x * g1x + g1y * g1y + g2x * g2x + g2y * g2y);
        if (gnorm < 1e-18)
            break;
        bool stepped = false;
        for (int bt = 0; bt < 20; ++bt, step *= 0.5) {
            auto clamp_disk = [](Complex w) {
                const double r = std::abs(w);
                return r >= 1.0 - 1e-9 ? w * ((1.0 - 1e-9) / r) : w;
            };
            const Complex p = clamp_disk(z1 - (step / gnorm) * Complex(g1x, g1y));
            const Complex q = clamp_disk(z2 - (step / gnorm) * Complex(g2x, g2y));
            const double v = objective(p, q);
            if (v < value) {
                z1 = p;
                z2 = q;
                value = v;
                step *= 2.0;
                stepped = true;
                break;
            }
        }
        if (!stepped)
            break;
    }
    if (std::abs(f.eval(z1) - f.eval(z2)) < kNewtonTarget && std::abs(z1 - z2) >= delta)
        return std::make_pair(z1, z2);
    return std::nullopt;
}

double orient(Complex a, Complex b, Complex c) {
    return (b.real() - a.real()) * (c.imag() - a.imag()) -
           (b.imag() - a.imag()) * (c.real() - a.real());
}

bool proper_crossing(Complex a, Complex b, Complex c, Complex d) {
    const double o1 = orient(a, b, c);
    const double o2 = orient(a, b, d);
    const double o3 = orient(c, d, a);
    const double o4 = orient(c, d, b);
    if (o1 == 0.0 || o2 == 0.0 || o3 == 0.0 || o4 == 0.0)
        return false; // touching or collinear: not transversal
    return (o1 > 0.0) != (o2 > 0.0) && (o3 > 0.0) != (o4 > 0.0);
}

bool collinear_overlap(Complex a, Complex b, Complex c, Complex d) {
    if (orient(a, b, c) != 0.0 || orient(a, b, d) != 0.0)
        return false;
    const double lo1 = std::min(a.real(), b.real()), hi1 = std::max(a.real(), b.real());
    const double lo2 = std::min(c.real(), d.real()), hi2 = std::max(c.real(), d.real());
    const double lo1y = std::min(a.imag(), b.imag()), hi1y = std::max(a.imag(), b.imag());
    const double lo2y = std::min(c.imag(), d.imag()), hi2y = std::max(c.imag(), d.imag());
    return hi1 >= lo2 && hi2 >= lo1 && hi1y >= lo2y && hi2y >= lo1y;
}

// The crossing of segment [a, b] with the line through c and d, located by
// bisection on the segment parameter (the orientation against cd changes
// sign between the endpoints of a proper crossing).
Complex bisect_crossing(Complex a, Complex b, Complex c, Complex d) {
    double lo = 0.0, hi = 1.0;
    double olo = orient(c, d, a);
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        const Complex p = a + mid * (b - a);
        const double om = orient(c, d, p);
        if (om == 0.0)
            return p;
        if ((om > 0.0) == (olo > 0.0)) {
            lo = mid;
            olo = om;
        } else {
            hi = mid;
        }
    }
    const double t = 0.5 * (lo + hi);
    return a + t * (b - a);
}

} // namespace

double jacobian(const HarmonicMap& f, Complex z) {
    if (std::abs(z) >= 1.0)
        throw DomainError("jacobian: |z| must be < 1");
    const Complex hp = f.h->eval(z).d1;
    const Complex gp = f.g->eval(z).d1;
    return std::norm(hp) - std::norm(gp);
}

InjectivityReport injectivity_scan(const HarmonicMap& f, int resolution, double delta) {
    if (resolution < 32)
        throw DomainError("injectivity_scan: resolution must be >= 32");
    if (!(delta > 0.0 && delta < 1.0))
        throw DomainError("injectivity_scan: delta must lie in (0, 1)");

    InjectivityReport report;
    report.resolution = resolution;
    report.delta = delta;

    const std::size_t res = static_cast<std::size_t>(resolution);
    const std::size_t total = res * res;
    std::vector<Complex> z(total), image(total);
    std::vector<unsigned char> failed(total, 0);
    parallel_index(total, [&](std::size_t idx) {
        const std::size_t i = idx / res;
        const std::size_t j = idx % res;
        const double r = kScanRadiusCap * static_cast<double>(i + 1) / static_cast<double>(res);
        const double theta = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(res);
        z[idx] = std::polar(r, theta);
        try {
            image[idx] = f.eval(z[idx]);
        } catch (const std::exception&) {
            failed[idx] = 1;
        }
    });

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (failed[idx]) {
            ++report.evaluation_failures;
            continue;
        }
        xmin = std::min(xmin, image[idx].real());
        xmax = std::max(xmax, image[idx].real());
        ymin = std::min(ymin, image[idx].imag());
        ymax = std::max(ymax, image[idx].imag());
    }
    if (report.evaluation_failures == total) {
        report.verdict = ScanVerdict::inconclusive;
        return report;
    }

    const double diameter = std::hypot(xmax - xmin, ymax - ymin);
    const double side = std::max(diameter / resolution, 1e-300);

    std::unordered_map<std::int64_t, std::vector<std::uint32_t>> cells;
    cells.reserve(total);
    auto cell_of = [&](Complex w) {
        const auto cx = static_cast<std::int64_t>(std::floor((w.real() - xmin) / side));
        const auto cy = static_cast<std::int64_t>(std::floor((w.imag() - ymin) / side));
        return std::make_pair(cx, cy);
    };
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (failed[idx])
            continue;
        const auto [cx, cy] = cell_of(image[idx]);
        cells[cell_key(cx, cy)].push_back(static_cast<std::uint32_t>(idx));
    }

    // Candidates in canonical order: points by index, neighbor cells in a
    // fixed sweep, partners by index. First verified witness wins.
    for (std::size_t p = 0; p < total && !report.witness; ++p) {
        if (failed[p])
            continue;
        const auto [cx, cy] = cell_of(image[p]);
        for (int dx = -1; dx <= 1 && !report.witness; ++dx) {
            for (int dy = -1; dy <= 1 && !report.witness; ++dy) {
                const auto it = cells.find(cell_key(cx + dx, cy + dy));
                if (it == cells.end())
                    continue;
                for (std::uint32_t q : it->second) {
                    if (q <= p)
                        continue;
                    if (std::abs(z[p] - z[q]) < delta)
                        continue;
                    ++report.candidates_examined;
                    std::optional<CollisionWitness> witness;
                    try {
                        if (auto z2 = newton_refine(f, image[p], z[q])) {
                            witness = verify_witness(f, z[p], *z2, delta);
                        } else if (auto pair = descent_refine(f, z[p], z[q], delta)) {
                            witness = verify_witness(f, pair->first, pair->second, delta);
                        }
                    } catch (const std::exception&) {
                        continue; // refinement wandered into a singularity; not a witness
                    }
                    if (witness) {
                        report.witness = witness;
                        break;
                    }
                }
            }
        }
    }

    if (report.witness)
        report.verdict = ScanVerdict::collision_found;
    else if (report.evaluation_failures > 0)
        report.verdict = ScanVerdict::inconclusive;
    else
        report.verdict = ScanVerdict::no_collision_at_resolution;
    return report;
}

BoundaryCurve boundary_curve(const HarmonicMap& f, int n) {
    if (!f.extends_to_closed_disk())
        throw DomainError("boundary_curve: map lacks the closed-disk continuity flag");
    if (n < 64)
        throw DomainError("boundary_curve: need n >= 64");
    BoundaryCurve curve;
    curve.theta.resize(static_cast<std::size_t>(n));
    curve.points.resize(static_cast<std::size_t>(n));
    parallel_index(static_cast<std::size_t>(n), [&](std::size_t j) {
        const double theta = 2.0 * kPi * static_cast<double>(j) / n;
        curve.theta[j] = theta;
        curve.points[j] = f.eval(std::polar(1.0, theta));
    });
    return curve;
}

SelfIntersections self_intersections(const BoundaryCurve& curve) {
    const std::size_t n = curve.points.size();
    SelfIntersections out;
    if (n < 3)
        throw DomainError("self_intersections: need at least 3 samples");

    double max_len = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        max_len = std::max(max_len, std::abs(curve.points[(i + 1) % n] - curve.points[i]));
    const double side = std::max(max_len, 1e-300);

    std::unordered_map<std::int64_t, std::vector<std::uint32_t>> cells;
    auto bbox_cells = [&](std::size_t i, auto&& fn) {
        const Complex a = curve.points[i];
        const Complex b = curve.points[(i + 1) % n];
        const auto cx0 = static_cast<std::int64_t>(std::floor(std::min(a.real(), b.real()) / side));
        const auto cx1 = static_cast<std::int64_t>(std::floor(std::max(a.real(), b.real()) / side));
        const auto cy0 = static_cast<std::int64_t>(std::floor(std::min(a.imag(), b.imag()) / side));
        const auto cy1 = static_cast<std::int64_t>(std::floor(std::max(a.imag(), b.imag()) / side));
        for (std::int64_t cx = cx0; cx <= cx1; ++cx)
            for (std::int64_t cy = cy0; cy <= cy1; ++cy)
                fn(cell_key(cx, cy));
    };
    for (std::size_t i = 0; i < n; ++i)
        bbox_cells(i, [&](std::int64_t key) { cells[key].push_back(static_cast<std::uint32_t>(i)); });

    std::unordered_set<std::uint64_t> seen;
    for (std::size_t i = 0; i < n; ++i) {
        const Complex a = curve.points[i];
        const Complex b = curve.points[(i + 1) % n];
        bbox_cells(i, [&](std::int64_t key) {
            const auto it = cells.find(key);
            if (it == cells.end())
                return;
            for (std::uint32_t j : it->second) {
                if (j <= i)
                    continue;
                const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
                if (adjacent)
                    continue;
                const std::uint64_t pair_key = (static_cast<std::uint64_t>(i) << 32) | j;
                if (!seen.insert(pair_key).second)
                    continue;
                const Complex c = curve.points[j];
                const Complex d = curve.points[(j + 1) % n];
                if (proper_crossing(a, b, c, d)) {
                    out.crossings.push_back({i, j, bisect_crossing(a, b, c, d)});
                } else if (collinear_overlap(a, b, c, d)) {
                    out.degenerate.emplace_back(i, j);
                }
            }
        });
    }

    std::sort(out.crossings.begin(), out.crossings.end(),
              [](const Crossing& lhs, const Crossing& rhs) {
                  return lhs.i != rhs.i ? lhs.i < rhs.i : lhs.j < rhs.j;
              });
    std::sort(out.degenerate.begin(), out.degenerate.end());
    return out;
}

std::vector<double> cusp_candidates(const HarmonicMap& f, int n, double tol) {
    if (!f.extends_to_closed_disk())
        throw DomainError("cusp_candidates: map lacks the closed-disk continuity flag");
    if (n < 256)
        throw DomainError("cusp_candidates: need n >= 256");

    auto speed = [&f](double theta) {
        const Complex z = std::polar(1.0, theta);
        try {
            const Complex hp = f.h->value_and_derivative(z).second;
            const Complex gp = f.g->value_and_derivative(z).second;
            const Complex tangent_factor = Complex(0.0, 1.0) * z;
            const Complex t = tangent_factor * hp + std::conj(tangent_factor * gp);
            const double s = std::abs(t);
            return std::isfinite(s) ? s : std::numeric_limits<double>::infinity();
        } catch (const std::exception&) {
            return std::numeric_limits<double>::infinity();
        }
    };

    const double dtheta = 2.0 * kPi / n;
    std::vector<double> s(static_cast<std::size_t>(n));
    parallel_index(static_cast<std::size_t>(n), [&](std::size_t j) { s[j] = speed(dtheta * j); });

    std::vector<double> cusps;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        const double prev = s[(j + n - 1) % n];
        const double next = s[(j + 1) % n];
        if (!(s[j] < tol) || !(s[j] <= prev) || !(s[j] < next))
            continue;
        // Golden-section on the bracketing interval (theta may run negative
        // across the wrap; normalized below).
        double lo = dtheta * (static_cast<double>(j) - 1.0);
        double hi = dtheta * (static_cast<double>(j) + 1.0);
        double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
        double f1 = speed(x1), f2 = speed(x2);
        for (int iter = 0; iter < 100 && (hi - lo) > 1e-13; ++iter) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - phi * (hi - lo);
                f1 = speed(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + phi * (hi - lo);
                f2 = speed(x2);
            }
        }
        double theta = 0.5 * (lo + hi);
        theta = std::fmod(theta, 2.0 * kPi);
        if (theta < 0.0)
            theta += 2.0 * kPi;
        if (theta >= 2.0 * kPi - 1e-12)
            theta = 0.0;
        cusps.push_back(theta);
    }

    std::sort(cusps.begin(), cusps.end());
    // Merge near-duplicates, including across the wrap.
    std::vector<double> merged;
    for (double t : cusps) {
        if (!merged.empty() && t - merged.back() < dtheta)
            continue;
        merged.push_back(t);
    }
    if (merged.size() > 1 && (2.0 * kPi - merged.back()) + merged.front() < dtheta)
        merged.pop_back();
    return merged;
}

} // namespace schwlab
