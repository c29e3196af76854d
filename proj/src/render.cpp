#include "involute/render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "involute/involute.hpp"
#include "involute/polygon.hpp"
#include "involute/svg.hpp"

namespace involute {

namespace {

constexpr double kPi = std::numbers::pi;

const char* kCurveColors[] = {"black",  "#1f77b4", "#d62728", "#2ca02c",
                              "#9467bd", "#e377c2", "#ff7f0e", "#8c564b"};

std::vector<Point2> polyline(const ParametricCurve& curve, int samples) {
    std::vector<Point2> pts;
    for (const auto& [t, p] : sample(curve, samples)) pts.push_back(p);
    return pts;
}

struct Bounds {
    double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
    void include(const Point2& p) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    }
    void pad(double f) {
        const double m = f * std::max(x1 - x0, y1 - y0);
        x0 -= m; y0 -= m; x1 += m; y1 += m;
    }
};

SvgWriter make_writer(const FigureSpec& spec, const Bounds& b) {
    if (spec.zoom)
        return SvgWriter(spec.zoom->x0, spec.zoom->y0, spec.zoom->x1,
                         spec.zoom->y1, spec.pixel_width);
    return SvgWriter(b.x0, b.y0, b.x1, b.y1, spec.pixel_width);
}

std::string superscript(int k) {
    static const char* digits[] = {"⁰", "¹", "²", "³",
                                   "⁴", "⁵", "⁶", "⁷",
                                   "⁸", "⁹"};
    std::string out;
    for (char c : std::to_string(k)) out += digits[c - '0'];
    return out;
}

std::string segment_label(int k) {
    if (k == 1) return "θ";
    std::ostringstream out;
    out << "θ" << superscript(k) << "/" << k << "!";
    return out.str();
}

std::string render_tower(const FigureSpec& spec) {
    const InvoluteTower tower = build_tower(spec.theta, spec.depth);
    Bounds b;
    std::vector<std::vector<Point2>> lines;
    for (const ParametricCurve& c : tower.curves) {
        lines.push_back(polyline(c, spec.samples));
        for (const Point2& p : lines.back()) b.include(p);
    }
    b.pad(0.08);
    SvgWriter svg = make_writer(spec, b);
    const Point2 origin{0, 0};
    const Point2 a = tower.curves[0].position(0.0);
    svg.line(origin, tower.endpoints[0], "gray", 1);
    svg.line(origin, a, "gray", 1);
    for (std::size_t k = 0; k < lines.size(); ++k)
        svg.polyline_path(lines[k], kCurveColors[k % 8], 1.5);
    for (int k = 1; k <= tower.depth; ++k) {
        const Point2 p = tower.endpoints[k - 1];
        const Point2 q = tower.endpoints[k];
        svg.line(p, q, "black", 1);
        svg.text((p + q) / 2 + Vec2{0.01, 0.01}, segment_label(k), 14);
    }
    for (int k = 0; k <= tower.depth; ++k) {
        svg.dot(tower.endpoints[k], 2.5, "black");
        svg.text(tower.endpoints[k] + Vec2{0.012, -0.03},
                 "A" + std::to_string(k), 13);
    }
    svg.dot(a, 2.5, "black");
    svg.text(a + Vec2{-0.05, 0.02}, "A", 13);
    return svg.str();
}

std::string render_circle_involute(const FigureSpec& spec) {
    ParametricCurve circle(Interval(0.0, 2.0 * kPi), [](double t, int order) {
        const Jet u = Jet::variable(t, order);
        Jet s(order), c(order);
        jet_sincos(u, s, c);
        return JetVec2{c, s};
    });
    const InvoluteCurve inv = involute(circle);
    const std::vector<Point2> spiral = polyline(inv.curve, spec.samples);
    Bounds b;
    for (const Point2& p : spiral) b.include(p);
    b.include({-1, -1});
    b.pad(0.08);
    SvgWriter svg = make_writer(spec, b);
    svg.circle({0, 0}, 1.0, "black", 1.5);
    svg.polyline_path(spiral, "#1f77b4", 1.5);
    svg.line(circle.position(0.0), inv.curve.position(2.0 * kPi), "#d62728", 1);
    svg.dot(circle.position(0.0), 2.5, "black");
    return svg.str();
}

std::string render_arc_string(const FigureSpec& spec) {
    const ParametricCurve arc = unit_arc(spec.theta);
    const InvoluteCurve inv = involute(arc);
    Bounds b;
    const std::vector<Point2> arc_pts = polyline(arc, spec.samples);
    const std::vector<Point2> inv_pts = polyline(inv.curve, spec.samples);
    for (const Point2& p : arc_pts) b.include(p);
    for (const Point2& p : inv_pts) b.include(p);
    b.pad(0.08);
    SvgWriter svg = make_writer(spec, b);
    const Point2 origin{0, 0};
    svg.line(origin, arc.position(0.0), "gray", 1);
    svg.line(origin, arc.position(spec.theta), "gray", 1);
    svg.polyline_path(arc_pts, "black", 1.5);
    svg.polyline_path(inv_pts, "#1f77b4", 1.5);
    // String shown part-way through the unwinding, tangent at the peel-off point.
    const double tm = 0.5 * spec.theta;
    svg.line(arc.position(tm), inv.curve.position(tm), "#d62728", 1.5);
    svg.dot(arc.position(tm), 2.5, "black");
    svg.dot(inv.curve.position(tm), 2.5, "black");
    return svg.str();
}

std::string render_polygon(const FigureSpec& spec) {
    const RegularPolygon poly(spec.n, spec.side);
    const PiecewiseArcCurve chain = polygon_involute(poly);
    Bounds b;
    for (const CircularArc& arc : chain.arcs) {
        // Conservative: include the arc's bounding circle corners.
        b.include(arc.center + Vec2{arc.radius, arc.radius});
        b.include(arc.center - Vec2{arc.radius, arc.radius});
    }
    b.pad(0.04);
    SvgWriter svg = make_writer(spec, b);
    svg.polygon_outline(poly.vertices(), "black", 1.5);
    for (std::size_t k = 0; k < chain.arcs.size(); ++k)
        svg.arc_path(chain.arcs[k], kCurveColors[1 + k % 7], 1.5);
    const std::vector<Point2> junctions = chain.junctions();
    for (std::size_t k = 0; k < chain.arcs.size(); ++k) {
        const CircularArc& arc = chain.arcs[k];
        svg.line(arc.center, junctions[k + 1], "black", 1, /*dashed=*/true);
        std::ostringstream label;
        if (k > 0) label << (k + 1);
        label << "a";
        svg.text((arc.center + junctions[k + 1]) / 2, label.str(), 13);
    }
    return svg.str();
}

} // namespace

std::string render_figure(const FigureSpec& spec) {
    if (spec.samples < 2) throw std::invalid_argument("figure needs samples >= 2");
    switch (spec.kind) {
        case FigureKind::Tower: return render_tower(spec);
        case FigureKind::CircleInvolute: return render_circle_involute(spec);
        case FigureKind::ArcString: return render_arc_string(spec);
        case FigureKind::Polygon: return render_polygon(spec);
    }
    throw std::invalid_argument("unknown figure kind");
}

} // namespace involute
