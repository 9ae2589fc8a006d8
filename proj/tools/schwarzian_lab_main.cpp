// schwarzian-lab: norm estimation, univalence criteria, injectivity scans,
// and boundary figures for harmonic mappings of the unit disk.
//
// Exit codes: 0 completed, 2 usage/config error, 3 inconclusive numeric run,
// 4 internal evaluation failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "schwlab/criteria.hpp"
#include "schwlab/map_spec.hpp"
#include "schwlab/serialize.hpp"
#include "schwlab/suites.hpp"
#include "schwlab/svg.hpp"

namespace {

using namespace schwlab;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitInternal = 4;

struct ConfigExit {
    std::string message;
};

struct MapOption {
    std::string raw;

    HarmonicMap build() const {
        if (raw.empty())
            throw ConfigExit{"--map is required for this command"};
        std::string text = raw;
        if (raw.front() != '{') {
            std::ifstream in(raw);
            if (!in)
                throw ConfigExit{"--map: cannot open file " + raw};
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
        try {
            return map_from_json_text(text);
        } catch (const std::exception& e) {
            throw ConfigExit{e.what()};
        }
    }
};

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw ConfigExit{"cannot open output path " + out_path};
    out << payload;
}

std::string sampling_json(const char* kind, std::uint64_t seed, std::size_t count) {
    std::ostringstream out;
    out << "{\"kind\": \"" << kind << "\", \"seed\": " << seed << ", \"count\": " << count << "}";
    return out.str();
}

std::string suite_json(const std::string& criterion, bool satisfied, double worst_margin,
                       Complex worst_point, std::size_t samples, double tolerance,
                       const std::string& sampling) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"criterion\": \"" << criterion << "\",\n";
    out << "  \"satisfied\": " << (satisfied ? "true" : "false") << ",\n";
    out << "  \"worst_margin\": " << json_number(worst_margin) << ",\n";
    out << "  \"worst_point\": " << json_complex(worst_point) << ",\n";
    out << "  \"samples_evaluated\": " << samples << ",\n";
    out << "  \"grid\": " << sampling << ",\n";
    out << "  \"tolerance\": " << json_number(tolerance) << "\n";
    out << "}\n";
    return out.str();
}

int run_norm(const MapOption& map, const GridSpec& grid, const std::string& out_path) {
    const HarmonicMap f = map.build();
    const NormEstimate est = schwarzian_norm_estimate(f, grid);
    write_output(out_path, to_json(est));
    return kExitOk;
}

int run_sweep(const std::vector<double>& alphas, const GridSpec& grid,
              const std::string& out_path) {
    if (alphas.empty())
        throw ConfigExit{"--alphas needs at least one value"};
    for (double a : alphas)
        if (a < 1.0)
            throw ConfigExit{"--alphas: the sweep requires alpha >= 1"};
    std::ostringstream csv;
    csv << "alpha,norm_estimate,paper_bound\n";
    char buf[128];
    for (double a : alphas) {
        const NormEstimate est = schwarzian_norm_estimate(make_f_alpha(a), grid);
        const double bound = norm_bound_f_alpha(a);
        if (est.lower_bound > bound + 1e-9) {
            std::cerr << "sweep: estimate exceeds the analytic bound at alpha = " << a << "\n";
            return kExitInternal;
        }
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", a, est.lower_bound, bound);
        csv << buf;
    }
    write_output(out_path, csv.str());
    return kExitOk;
}

int run_criteria(const std::string& check, const MapOption& map, const GridSpec& grid,
                 std::uint64_t seed, double tol, const std::string& out_path) {
    if (check == "thm3" || check == "thm4") {
        const HarmonicMap f = map.build();
        const CriterionVerdict v =
            check == "thm3" ? thm3_check(f, grid, tol) : thm4_check(f, grid, tol);
        write_output(out_path, to_json(v));
        return v.inconclusive ? kExitInconclusive : kExitOk;
    }

    if (check == "lemma") {
        Xoshiro256 rng(seed);
        double worst = -std::numeric_limits<double>::infinity();
        Complex worst_point = 0.0;
        std::size_t samples = 0;
        for (int b = 0; b < 20; ++b) {
            const EvaluatorPtr omega = random_blaschke(rng, 4);
            for (int i = 0; i < 500; ++i) {
                const Complex z = rng.in_disk(0.95);
                const double gap = lemma_gap(*omega, z);
                ++samples;
                if (gap > worst) {
                    worst = gap;
                    worst_point = z;
                }
            }
        }
        const double tolerance = 1e-12;
        write_output(out_path, suite_json("lemma", worst <= tolerance, -worst, worst_point,
                                          samples, tolerance,
                                          sampling_json("blaschke_suite", seed, samples)));
        return kExitOk;
    }

    if (check == "identity") {
        Xoshiro256 rng(seed);
        double worst = 0.0;
        Complex worst_point = 0.0;
        std::size_t samples = 0;
        for (int s = 0; s < 10; ++s) {
            const HarmonicMap f = random_shear(rng);
            for (int i = 0; i < 1000; ++i) {
                const Complex z = rng.in_disk(0.95);
                const double res = sh_decomposition_residual(f, z);
                ++samples;
                if (res > worst) {
                    worst = res;
                    worst_point = z;
                }
            }
        }
        const double tolerance = 1e-9;
        write_output(out_path, suite_json("identity", worst < tolerance, -worst, worst_point,
                                          samples, tolerance,
                                          sampling_json("shear_suite", seed, samples)));
        return kExitOk;
    }

    if (check == "affine") {
        Xoshiro256 rng(seed);
        double worst = 0.0;
        Complex worst_point = 0.0;
        std::size_t samples = 0;
        std::vector<HarmonicMap> shears;
        for (int s = 0; s < 10; ++s)
            shears.push_back(random_shear(rng));
        for (int i = 0; i < 1000; ++i) {
            const HarmonicMap& f = shears[static_cast<std::size_t>(i) % shears.size()];
            const Complex a = rng.in_disk(0.8);
            const Complex z = rng.in_disk(0.95);
            const auto [ds, dw] = affine_invariance_residuals(f, a, z);
            ++samples;
            if (std::max(ds, dw) > worst) {
                worst = std::max(ds, dw);
                worst_point = z;
            }
        }
        const double tolerance = 1e-10;
        write_output(out_path, suite_json("affine", worst < tolerance, -worst, worst_point,
                                          samples, tolerance,
                                          sampling_json("affine_suite", seed, samples)));
        return kExitOk;
    }

    if (check == "root") {
        const double c = solve_c();
        std::ostringstream out;
        out << "{\n  \"criterion\": \"root\",\n";
        out << "  \"c\": " << json_number(c) << ",\n";
        out << "  \"residual\": " << json_number(std::abs(2.0 * c * std::tan(c) - 1.0)) << ",\n";
        out << "  \"two_c_squared\": " << json_number(2.0 * c * c) << "\n}\n";
        write_output(out_path, out.str());
        return kExitOk;
    }

    throw ConfigExit{"--check must be one of thm3, thm4, lemma, identity, affine, root"};
}

int run_scan(const MapOption& map, int resolution, double delta, const std::string& out_path) {
    const HarmonicMap f = map.build();
    const InjectivityReport report = injectivity_scan(f, resolution, delta);
    write_output(out_path, to_json(report));
    return report.verdict == ScanVerdict::inconclusive ? kExitInconclusive : kExitOk;
}

int run_render(const MapOption& map, int samples, const std::string& out_path) {
    const HarmonicMap f = map.build();
    if (!f.extends_to_closed_disk())
        throw ConfigExit{"render: the map does not extend continuously to the closed disk"};
    const BoundaryCurve curve = boundary_curve(f, samples);
    const SelfIntersections crossings = self_intersections(curve);
    const std::vector<double> cusps = cusp_candidates(f, samples, 0.05);

    std::vector<Complex> crossing_markers;
    for (const Crossing& c : crossings.crossings)
        crossing_markers.push_back(c.point);
    std::vector<Complex> cusp_markers;
    for (double theta : cusps)
        cusp_markers.push_back(f.eval(std::polar(1.0, theta)));

    write_output(out_path, render_svg({curve}, crossing_markers, cusp_markers));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schwarzian-derivative toolkit for harmonic mappings of the unit disk"};
    app.require_subcommand(1);

    MapOption map;
    GridSpec grid;
    std::string out_path;
    std::string format;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    int resolution = 400;
    double delta = 0.05;
    int samples = 4096;
    std::vector<double> alphas;
    std::string check;

    auto add_common = [&](CLI::App* cmd, bool with_grid) {
        cmd->add_option("--out", out_path, "output path (stdout when omitted)");
        cmd->add_option("--format", format, "output format override (json|csv|svg)");
        if (with_grid) {
            cmd->add_option("--grid-levels", grid.levels, "radial levels")->check(CLI::Range(1, 40));
            cmd->add_option("--grid-base", grid.angular_base, "angular base count")
                ->check(CLI::Range(4, 65536));
            cmd->add_option("--grid-rmax", grid.r_max, "deepest sampling radius (< 1)");
        }
    };

    CLI::App* norm = app.add_subcommand("norm", "hyperbolically weighted Schwarzian supremum");
    norm->add_option("--map", map.raw, "map description (JSON or file)")->required();
    add_common(norm, true);

    CLI::App* sweep = app.add_subcommand("sweep", "family norm estimates against the bound");
    sweep->add_option("--alphas", alphas, "comma-separated alpha list (each >= 1)")
        ->required()
        ->delimiter(',');
    add_common(sweep, true);

    CLI::App* criteria = app.add_subcommand("criteria", "univalence criteria and identities");
    criteria->add_option("--check", check, "thm3|thm4|lemma|identity|affine|root")->required();
    criteria->add_option("--map", map.raw, "map description (for thm3/thm4)");
    criteria->add_option("--seed", seed, "suite seed");
    criteria->add_option("--tol", tol, "verdict tolerance");
    add_common(criteria, true);

    CLI::App* scan = app.add_subcommand("scan", "injectivity collision scan");
    scan->add_option("--map", map.raw, "map description")->required();
    scan->add_option("--resolution", resolution, "grid resolution")->check(CLI::Range(32, 4096));
    scan->add_option("--delta", delta, "preimage separation floor");
    add_common(scan, false);

    CLI::App* render = app.add_subcommand("render", "boundary curve figure (SVG)");
    render->add_option("--map", map.raw, "map description")->required();
    render->add_option("--samples", samples, "boundary samples")->check(CLI::Range(256, 1 << 20));
    add_common(render, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!format.empty()) {
            const bool ok = (format == "json" && (norm->parsed() || criteria->parsed() ||
                                                  scan->parsed())) ||
                            (format == "csv" && sweep->parsed()) ||
                            (format == "svg" && render->parsed());
            if (!ok)
                throw ConfigExit{"--format " + format + " is not available for this command"};
        }
        if (norm->parsed())
            return run_norm(map, grid, out_path);
        if (sweep->parsed())
            return run_sweep(alphas, grid, out_path);
        if (criteria->parsed())
            return run_criteria(check, map, grid, seed, tol, out_path);
        if (scan->parsed())
            return run_scan(map, resolution, delta, out_path);
        if (render->parsed())
            return run_render(map, samples, out_path);
        throw ConfigExit{"no subcommand selected"};
    } catch (const ConfigExit& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitConfig;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "internal failure: " << e.what() << "\n";
        return kExitInternal;
    }
}
