#include <doctest.h>

#include <string>

#include "involute/polygon.hpp"
#include "involute/render.hpp"
#include "involute/svg.hpp"

using namespace involute;

namespace {

int count(const std::string& hay, const std::string& needle) {
    int n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

} // namespace

TEST_CASE("svg writer produces a well-formed document") {
    SvgWriter svg(-1.0, -1.0, 1.0, 1.0, 400);
    svg.circle({0, 0}, 1.0, "black", 1.0);
    svg.line({-1, 0}, {1, 0}, "red", 1.0, /*dashed=*/true);
    svg.text({0.1, 0.1}, "a < b & c", 12);
    const std::string doc = svg.str();
    CHECK(doc.find("<?xml") == 0);
    CHECK(doc.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    CHECK(doc.find("viewBox=\"-1 -1 2 2\"") != std::string::npos);
    CHECK(doc.find("width=\"400\" height=\"400\"") != std::string::npos);
    CHECK(doc.find("scale(1,-1)") != std::string::npos);
    CHECK(doc.find("stroke-dasharray") != std::string::npos);
    CHECK(doc.find("a &lt; b &amp; c") != std::string::npos);
    CHECK(doc.find("</svg>") != std::string::npos);
    CHECK_THROWS_AS(SvgWriter(0.0, 0.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("arc path picks the clockwise candidate") {
    SvgWriter svg(-5.0, -5.0, 5.0, 5.0, 100);
    const CircularArc cw{{0, 0}, 2.0, 1.0, 0.2};   // clockwise, minor arc
    const CircularArc ccw{{0, 0}, 2.0, 0.2, 1.0};  // counterclockwise
    svg.arc_path(cw, "black", 1.0);
    svg.arc_path(ccw, "black", 1.0);
    const std::string doc = svg.str();
    CHECK(doc.find("0 0 0 ") != std::string::npos);  // x-rot, large, sweep for cw
    CHECK(doc.find("0 0 1 ") != std::string::npos);
}

TEST_CASE("tower figure carries the curves and series-term labels") {
    FigureSpec spec;
    spec.kind = FigureKind::Tower;
    spec.theta = 1.0;
    spec.depth = 4;
    spec.samples = 64;
    const std::string doc = render_figure(spec);
    // One polyline per level, plus labeled chords between the endpoints.
    CHECK(count(doc, "<path ") == spec.depth + 1);
    CHECK(count(doc, "<line ") >= spec.depth);
    CHECK(doc.find(">θ</text>") != std::string::npos);
    CHECK(doc.find("θ²/2!") != std::string::npos);
    CHECK(doc.find("θ³/3!") != std::string::npos);
    CHECK(doc.find("θ⁴/4!") != std::string::npos);
    for (int k = 0; k <= spec.depth; ++k)
        CHECK(doc.find(">A" + std::to_string(k) + "</text>") != std::string::npos);
}

TEST_CASE("circle-involute figure has the circle, the spiral, and the string") {
    FigureSpec spec;
    spec.kind = FigureKind::CircleInvolute;
    spec.samples = 128;
    const std::string doc = render_figure(spec);
    CHECK(count(doc, "<circle ") >= 1);
    CHECK(count(doc, "<path ") == 1);
    CHECK(count(doc, "<line ") == 1);
}

TEST_CASE("arc-string figure shows the taut string at mid-unwind") {
    FigureSpec spec;
    spec.kind = FigureKind::ArcString;
    spec.theta = 1.2;
    spec.samples = 64;
    const std::string doc = render_figure(spec);
    CHECK(count(doc, "<path ") == 2);   // arc and involute
    CHECK(count(doc, "<line ") == 3);   // two radii plus the string
}

TEST_CASE("polygon figure draws the outline, one arc per side, and the strings") {
    FigureSpec spec;
    spec.kind = FigureKind::Polygon;
    spec.n = 5;
    spec.side = 1.0;
    const std::string doc = render_figure(spec);
    CHECK(count(doc, "<polygon ") == 1);
    CHECK(count(doc, " A ") == spec.n);  // one arc command per side
    CHECK(count(doc, "stroke-dasharray") == spec.n);
    CHECK(doc.find(">a</text>") != std::string::npos);
    CHECK(doc.find(">5a</text>") != std::string::npos);
}

TEST_CASE("zoom window overrides the automatic bounds") {
    FigureSpec spec;
    spec.kind = FigureKind::Tower;
    spec.theta = 1.0;
    spec.depth = 2;
    spec.samples = 32;
    spec.zoom = ZoomWindow{0.0, 0.0, 0.5, 0.5};
    const std::string doc = render_figure(spec);
    CHECK(doc.find("viewBox=\"0 -0.5 0.5 0.5\"") != std::string::npos);
}

TEST_CASE("figure argument validation") {
    FigureSpec spec;
    spec.samples = 1;
    CHECK_THROWS_AS(render_figure(spec), std::invalid_argument);
}
