#include "involute/svg.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace involute {

namespace {

std::string num(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, p);
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

SvgWriter::SvgWriter(double x0, double y0, double x1, double y1, int pixel_width)
    : x0_(x0), y0_(y0), x1_(x1), y1_(y1), pixel_width_(pixel_width) {
    if (!(x1 > x0) || !(y1 > y0))
        throw std::invalid_argument("SvgWriter viewport must have positive extent");
}

double SvgWriter::stroke_scale() const { return (x1_ - x0_) / pixel_width_; }

void SvgWriter::polyline_path(const std::vector<Point2>& pts,
                              const std::string& stroke, double width,
                              bool dashed) {
    if (pts.size() < 2) return;
    std::ostringstream d;
    d << "M " << num(pts[0].x) << " " << num(pts[0].y);
    for (std::size_t i = 1; i < pts.size(); ++i)
        d << " L " << num(pts[i].x) << " " << num(pts[i].y);
    std::ostringstream el;
    el << "<path d=\"" << d.str() << "\" fill=\"none\" stroke=\"" << stroke
       << "\" stroke-width=\"" << num(width * stroke_scale()) << "\"";
    if (dashed)
        el << " stroke-dasharray=\"" << num(6 * stroke_scale()) << " "
           << num(4 * stroke_scale()) << "\"";
    el << "/>";
    body_.push_back(el.str());
}

void SvgWriter::line(const Point2& a, const Point2& b, const std::string& stroke,
                     double width, bool dashed) {
    std::ostringstream el;
    el << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
       << num(b.x) << "\" y2=\"" << num(b.y) << "\" stroke=\"" << stroke
       << "\" stroke-width=\"" << num(width * stroke_scale()) << "\"";
    if (dashed)
        el << " stroke-dasharray=\"" << num(6 * stroke_scale()) << " "
           << num(4 * stroke_scale()) << "\"";
    el << "/>";
    body_.push_back(el.str());
}

void SvgWriter::arc_path(const CircularArc& arc, const std::string& stroke,
                         double width) {
    const Point2 a = arc.start_point();
    const Point2 b = arc.end_point();
    const double sweep = arc.sweep();
    // Arc flags are resolved in the path's local coordinates, before the
    // group's y-flip: sweep-flag 1 is the increasing-angle direction there,
    // so a clockwise (negative) sweep takes flag 0.
    const int large = std::fabs(sweep) > std::numbers::pi ? 1 : 0;
    const int flag = sweep < 0 ? 0 : 1;
    std::ostringstream el;
    el << "<path d=\"M " << num(a.x) << " " << num(a.y) << " A "
       << num(arc.radius) << " " << num(arc.radius) << " 0 " << large << " "
       << flag << " " << num(b.x) << " " << num(b.y)
       << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
       << num(width * stroke_scale()) << "\"/>";
    body_.push_back(el.str());
}

void SvgWriter::polygon_outline(const std::vector<Point2>& pts,
                                const std::string& stroke, double width) {
    std::ostringstream el;
    el << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) el << " ";
        el << num(pts[i].x) << "," << num(pts[i].y);
    }
    el << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
       << num(width * stroke_scale()) << "\"/>";
    body_.push_back(el.str());
}

void SvgWriter::circle(const Point2& center, double r, const std::string& stroke,
                       double width) {
    std::ostringstream el;
    el << "<circle cx=\"" << num(center.x) << "\" cy=\"" << num(center.y)
       << "\" r=\"" << num(r) << "\" fill=\"none\" stroke=\"" << stroke
       << "\" stroke-width=\"" << num(width * stroke_scale()) << "\"/>";
    body_.push_back(el.str());
}

void SvgWriter::dot(const Point2& p, double r, const std::string& fill) {
    std::ostringstream el;
    el << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\""
       << num(r * stroke_scale()) << "\" fill=\"" << fill << "\"/>";
    body_.push_back(el.str());
}

void SvgWriter::text(const Point2& p, const std::string& s, double size) {
    // Counter-flip so glyphs read upright inside the y-flipped group.
    std::ostringstream el;
    el << "<text x=\"" << num(p.x) << "\" y=\"" << num(-p.y)
       << "\" transform=\"scale(1,-1)\" font-size=\""
       << num(size * stroke_scale()) << "\" font-family=\"sans-serif\">"
       << escape(s) << "</text>";
    body_.push_back(el.str());
}

std::string SvgWriter::str() const {
    const double w = x1_ - x0_;
    const double h = y1_ - y0_;
    const int pixel_height = static_cast<int>(std::lround(pixel_width_ * h / w));
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << pixel_width_ << "\" height=\"" << pixel_height << "\" viewBox=\""
        << num(x0_) << " " << num(-y1_) << " " << num(w) << " " << num(h)
        << "\">\n";
    out << "<g transform=\"scale(1,-1)\">\n";
    for (const std::string& el : body_) out << el << "\n";
    out << "</g>\n</svg>\n";
    return out.str();
}

void SvgWriter::write(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << str();
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace involute
