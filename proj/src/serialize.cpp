#include "schwlab/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace schwlab {

std::string json_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_complex(Complex z) {
    return "[" + json_number(z.real()) + ", " + json_number(z.imag()) + "]";
}

std::string to_json(const GridSpec& grid) {
    std::ostringstream out;
    out << "{\"levels\": " << grid.levels << ", \"angular_base\": " << grid.angular_base
        << ", \"r_max\": " << json_number(grid.r_max) << "}";
    return out.str();
}

std::string to_json(const NormEstimate& estimate) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"lower_bound\": " << json_number(estimate.lower_bound) << ",\n";
    out << "  \"witness\": " << json_complex(estimate.witness_point) << ",\n";
    out << "  \"grid\": " << to_json(estimate.grid) << ",\n";
    out << "  \"extrapolated\": " << json_number(estimate.extrapolated) << ",\n";
    out << "  \"skipped_count\": " << estimate.skipped_count << ",\n";
    out << "  \"skipped\": [";
    for (std::size_t i = 0; i < estimate.skipped.size(); ++i)
        out << (i ? ", " : "") << json_complex(estimate.skipped[i]);
    out << "],\n";
    out << "  \"history\": [";
    for (std::size_t i = 0; i < estimate.refinement_history.size(); ++i) {
        const auto& [grid, bound] = estimate.refinement_history[i];
        out << (i ? ", " : "") << "{\"grid\": " << to_json(grid)
            << ", \"lower_bound\": " << json_number(bound) << "}";
    }
    out << "]\n}\n";
    return out.str();
}

std::string to_json(const CriterionVerdict& verdict) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"criterion\": \"" << verdict.criterion << "\",\n";
    out << "  \"satisfied\": " << (verdict.satisfied ? "true" : "false") << ",\n";
    out << "  \"inconclusive\": " << (verdict.inconclusive ? "true" : "false") << ",\n";
    out << "  \"worst_margin\": " << json_number(verdict.worst_margin) << ",\n";
    out << "  \"worst_point\": " << json_complex(verdict.worst_point) << ",\n";
    out << "  \"samples_evaluated\": " << verdict.samples_evaluated << ",\n";
    out << "  \"unverified\": " << verdict.unverified << ",\n";
    out << "  \"grid\": " << to_json(verdict.grid) << ",\n";
    out << "  \"tolerance\": " << json_number(verdict.tolerance) << "\n";
    out << "}\n";
    return out.str();
}

std::string verdict_name(ScanVerdict verdict) {
    switch (verdict) {
    case ScanVerdict::no_collision_at_resolution:
        return "no_collision_at_resolution";
    case ScanVerdict::collision_found:
        return "collision_found";
    case ScanVerdict::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

std::string to_json(const InjectivityReport& report) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"verdict\": \"" << verdict_name(report.verdict) << "\",\n";
    if (report.witness) {
        out << "  \"witness\": {\"z1\": " << json_complex(report.witness->z1)
            << ", \"z2\": " << json_complex(report.witness->z2)
            << ", \"image_gap\": " << json_number(report.witness->image_gap)
            << ", \"preimage_gap\": " << json_number(report.witness->preimage_gap) << "},\n";
    } else {
        out << "  \"witness\": null,\n";
    }
    out << "  \"resolution\": " << report.resolution << ",\n";
    out << "  \"delta\": " << json_number(report.delta) << ",\n";
    out << "  \"candidates_examined\": " << report.candidates_examined << ",\n";
    out << "  \"evaluation_failures\": " << report.evaluation_failures << "\n";
    out << "}\n";
    return out.str();
}

} // namespace schwlab
