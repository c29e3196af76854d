#pragma once

#include <string>
#include <vector>

#include "involute/geometry.hpp"
#include "involute/polygon.hpp"

namespace involute {

/// Minimal SVG 1.1 document builder for plane-geometry figures. Geometry is
/// given in the mathematical y-up frame; a single top-level transform maps
/// it to SVG's y-down coordinates, so drawing code stays sign-clean.
class SvgWriter {
public:
    /// viewBox in mathematical coordinates.
    SvgWriter(double x0, double y0, double x1, double y1, int pixel_width = 800);

    void polyline_path(const std::vector<Point2>& pts, const std::string& stroke,
                       double width, bool dashed = false);
    void line(const Point2& a, const Point2& b, const std::string& stroke,
              double width, bool dashed = false);
    void arc_path(const CircularArc& arc, const std::string& stroke, double width);
    void polygon_outline(const std::vector<Point2>& pts, const std::string& stroke,
                         double width);
    void circle(const Point2& center, double r, const std::string& stroke,
                double width);
    void dot(const Point2& p, double r, const std::string& fill);
    void text(const Point2& p, const std::string& s, double size);

    std::string str() const;
    void write(const std::string& path) const;

private:
    double stroke_scale() const;
    double x0_, y0_, x1_, y1_;
    int pixel_width_;
    std::vector<std::string> body_;
};

} // namespace involute
