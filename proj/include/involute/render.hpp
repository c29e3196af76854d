#pragma once

#include <optional>
#include <string>

#include "involute/geometry.hpp"

namespace involute {

enum class FigureKind {
    ArcString,       // circular arc with the string part-way unwound
    CircleInvolute,  // involute spiral of the full unit circle
    Tower,           // iterated involutes with labeled series-term segments
    Polygon,         // regular-polygon involute as an arc chain
};

struct ZoomWindow {
    double x0, y0, x1, y1;
};

struct FigureSpec {
    FigureKind kind = FigureKind::Tower;
    double theta = 1.0;   // arc/tower figures
    int depth = 4;        // tower figures
    int n = 5;            // polygon vertex count
    double side = 1.0;    // polygon side length
    int samples = 256;    // polyline resolution per curve
    int pixel_width = 800;
    std::optional<ZoomWindow> zoom;
};

/// Renders the figure to an SVG 1.1 document.
std::string render_figure(const FigureSpec& spec);

} // namespace involute
