#include "schwlab/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace schwlab {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000")
        s = "0.000000"; // avoid signed zeros flapping the output
    return s;
}

} // namespace

std::string render_svg(const std::vector<BoundaryCurve>& curves,
                       const std::vector<Complex>& crossing_markers,
                       const std::vector<Complex>& cusp_markers,
                       const SvgCanvas& canvas) {
    if (curves.empty())
        throw DomainError("render_svg: need at least one curve");
    for (const auto& curve : curves)
        if (curve.points.empty())
            throw DomainError("render_svg: curve without samples");

    double xmin = curves[0].points[0].real(), xmax = xmin;
    double ymin = curves[0].points[0].imag(), ymax = ymin;
    auto grow = [&](Complex p) {
        xmin = std::min(xmin, p.real());
        xmax = std::max(xmax, p.real());
        ymin = std::min(ymin, p.imag());
        ymax = std::max(ymax, p.imag());
    };
    for (const auto& curve : curves)
        for (Complex p : curve.points)
            grow(p);
    for (Complex p : crossing_markers)
        grow(p);
    for (Complex p : cusp_markers)
        grow(p);

    // Equal-aspect square viewBox with 5% total margin on the larger extent.
    const double extent = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double pad = 0.025 * extent;
    const double box = extent + 2.0 * pad;
    const double cx = 0.5 * (xmin + xmax);
    const double cy = 0.5 * (ymin + ymax);
    const double x0 = cx - 0.5 * box;
    // SVG's y axis points down; emit flipped y throughout.
    const double y0 = -cy - 0.5 * box;
    const double stroke = 0.0035 * box;
    const double marker = 0.012 * box;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << canvas.width
        << "\" height=\"" << canvas.height << "\" viewBox=\"" << fmt(x0) << " " << fmt(y0) << " "
        << fmt(box) << " " << fmt(box) << "\">\n";
    svg << "  <rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\"" << fmt(box)
        << "\" height=\"" << fmt(box) << "\" fill=\"white\"/>\n";

    const char* palette[] = {"#1f6feb", "#d64545", "#3b9e57", "#9048c8"};
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const auto& pts = curves[c].points;
        svg << "  <path fill=\"none\" stroke=\"" << palette[c % 4] << "\" stroke-width=\""
            << fmt(stroke) << "\" d=\"M " << fmt(pts[0].real()) << " " << fmt(-pts[0].imag());
        for (std::size_t k = 1; k < pts.size(); ++k)
            svg << " L " << fmt(pts[k].real()) << " " << fmt(-pts[k].imag());
        svg << " Z\"/>\n";
    }

    for (Complex p : crossing_markers) {
        svg << "  <circle cx=\"" << fmt(p.real()) << "\" cy=\"" << fmt(-p.imag()) << "\" r=\""
            << fmt(marker) << "\" fill=\"none\" stroke=\"#d64545\" stroke-width=\"" << fmt(stroke)
            << "\"/>\n";
    }
    for (Complex p : cusp_markers) {
        const double m = marker;
        svg << "  <path stroke=\"#222222\" stroke-width=\"" << fmt(stroke) << "\" d=\"M "
            << fmt(p.real() - m) << " " << fmt(-p.imag() - m) << " L " << fmt(p.real() + m) << " "
            << fmt(-p.imag() + m) << " M " << fmt(p.real() - m) << " " << fmt(-p.imag() + m)
            << " L " << fmt(p.real() + m) << " " << fmt(-p.imag() - m) << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace schwlab
