#pragma once

#include <string>

#include "schwlab/geometry.hpp"

namespace schwlab {

struct SvgCanvas {
    int width = 640;
    int height = 640;
};

/// Standalone SVG 1.1 document: equal-aspect viewBox fitted to the data with
/// a 5% margin, one path per curve, circles marking crossings and crosses
/// marking cusps. Fixed number formatting keeps the output byte-stable for a
/// fixed input.
std::string render_svg(const std::vector<BoundaryCurve>& curves,
                       const std::vector<Complex>& crossing_markers,
                       const std::vector<Complex>& cusp_markers,
                       const SvgCanvas& canvas = {});

} // namespace schwlab
