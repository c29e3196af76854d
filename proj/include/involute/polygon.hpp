#pragma once

#include <vector>

#include "involute/geometry.hpp"

namespace involute {

/// Regular n-gon with vertex 0 placed so the layout matches the unwinding
/// construction: vertices sit on the circumcircle, ordered clockwise from
/// the string's attachment vertex.
struct RegularPolygon {
    int n;
    double side;

    RegularPolygon(int n_, double side_);

    double circumradius() const;
    /// Vertex j (0-based, clockwise from the attachment vertex).
    Point2 vertex(int j) const;
    std::vector<Point2> vertices() const;
};

/// One circular arc, swept from start_angle to end_angle about center
/// (clockwise when end_angle < start_angle).
struct CircularArc {
    Point2 center;
    double radius;
    double start_angle;
    double end_angle;

    double sweep() const { return end_angle - start_angle; }
    Point2 point_at_angle(double angle) const;
    Point2 start_point() const { return point_at_angle(start_angle); }
    Point2 end_point() const { return point_at_angle(end_angle); }
    /// Unit tangent in traversal direction at the given angle.
    Vec2 tangent_at_angle(double angle) const;
};

/// Chain of circular arcs joined end to start.
struct PiecewiseArcCurve {
    std::vector<CircularArc> arcs;

    /// Points between consecutive arcs plus the chain's two ends.
    std::vector<Point2> junctions() const;
};

/// Total length: sum of radius * |sweep| over the arcs.
double arc_chain_length(const PiecewiseArcCurve& curve);

/// Involute of a regular polygon unwound clockwise from vertex 0: n*turns
/// arcs, the k-th (1-based) centered at the k-th vertex encountered, with
/// radius k*side and subtending the exterior angle 2*pi/n.
PiecewiseArcCurve polygon_involute(const RegularPolygon& poly, int turns = 1);

} // namespace involute
