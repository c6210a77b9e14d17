#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

#include "tilegraph/tiling.hpp"

namespace tilegraph {

// Deterministic SVG of a tiling: axis-parallel rectangles with a stroke,
// y-axis flipped so the bottom-left tile corner sits at the bottom left.
inline std::string svg_render(const Tiling& t, int px_width = 720, std::int64_t max_tiles = 100'000) {
    if (t.size() > max_tiles) throw std::runtime_error("svg_render: tiling too large to render");
    const double rx = to_double(t.region.x), ry = to_double(t.region.y);
    const double rw = to_double(t.region.w), rh = to_double(t.region.h);
    const double scale = px_width / rw;
    const double px_height = rh * scale;

    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px_width << "\" height=\"" << px_height
       << "\" viewBox=\"0 0 " << px_width << " " << px_height << "\">\n";
    for (const Tile& a : t.tiles) {
        const double x = (to_double(a.x) - rx) * scale;
        const double y = px_height - (to_double(a.y) - ry + to_double(a.h)) * scale;
        os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << to_double(a.w) * scale << "\" height=\""
           << to_double(a.h) * scale << "\" fill=\"#f6f3ee\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace tilegraph
