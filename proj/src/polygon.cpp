#include "involute/polygon.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace involute {

namespace {
constexpr double kPi = std::numbers::pi;
}

RegularPolygon::RegularPolygon(int n_, double side_) : n(n_), side(side_) {
    if (n < 3) throw std::invalid_argument("polygon needs n >= 3 vertices");
    if (!(side > 0.0)) throw std::invalid_argument("polygon side must be positive");
}

double RegularPolygon::circumradius() const {
    return side / (2.0 * std::sin(kPi / n));
}

Point2 RegularPolygon::vertex(int j) const {
    // Attachment vertex at angle pi/2 - 2*pi/n, successive vertices clockwise.
    const double beta = kPi / 2.0 - 2.0 * kPi / n * (j + 1);
    const double r = circumradius();
    return {r * std::cos(beta), r * std::sin(beta)};
}

std::vector<Point2> RegularPolygon::vertices() const {
    std::vector<Point2> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) v.push_back(vertex(j));
    return v;
}

Point2 CircularArc::point_at_angle(double angle) const {
    return {center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)};
}

Vec2 CircularArc::tangent_at_angle(double angle) const {
    const double dir = (sweep() >= 0.0) ? 1.0 : -1.0;
    return {-dir * std::sin(angle), dir * std::cos(angle)};
}

std::vector<Point2> PiecewiseArcCurve::junctions() const {
    std::vector<Point2> pts;
    if (arcs.empty()) return pts;
    pts.push_back(arcs.front().start_point());
    for (const CircularArc& arc : arcs) pts.push_back(arc.end_point());
    return pts;
}

double arc_chain_length(const PiecewiseArcCurve& curve) {
    double total = 0.0;
    for (const CircularArc& arc : curve.arcs)
        total += arc.radius * std::fabs(arc.sweep());
    return total;
}

PiecewiseArcCurve polygon_involute(const RegularPolygon& poly, int turns) {
    if (turns < 1) throw std::invalid_argument("polygon involute needs turns >= 1");
    const double exterior = 2.0 * kPi / poly.n;
    // Direction from vertex 1 back to vertex 0: the first arc starts at the
    // attachment vertex, with the string lying along that edge.
    const double beta0 = kPi / 2.0 - exterior;
    double angle = beta0 - kPi / poly.n + kPi / 2.0;
    PiecewiseArcCurve chain;
    chain.arcs.reserve(static_cast<std::size_t>(poly.n) * turns);
    for (int k = 1; k <= poly.n * turns; ++k) {
        CircularArc arc;
        arc.center = poly.vertex(k % poly.n);
        arc.radius = k * poly.side;
        arc.start_angle = angle;
        arc.end_angle = angle - exterior;  // clockwise sweep
        chain.arcs.push_back(arc);
        angle -= exterior;
    }
    return chain;
}

} // namespace involute
