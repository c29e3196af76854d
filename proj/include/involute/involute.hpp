#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "involute/curve.hpp"

namespace involute {

/// Hard ceiling on tower depth; numeric error compounds roughly linearly
/// with depth and this leaves headroom over the depths exercised in tests.
inline constexpr int kMaxTowerDepth = 12;

/// An involute together with its base curve and the cached arc-length table
/// used to evaluate it.
struct InvoluteCurve {
    ParametricCurve curve;
    ParametricCurve base;
    std::shared_ptr<const ArcLengthTable> arc_table;

    Point2 position(double t) const { return curve.position(t); }
    operator const ParametricCurve&() const { return curve; }
};

/// Involute of a plane curve with the string attached at the domain start:
///   x = f(t) - s(t) f'(t)/|v|,  y = g(t) - s(t) g'(t)/|v|.
/// The result is closed over the base curve (no resampling); if the base has
/// a Taylor evaluator, so does the involute.
InvoluteCurve involute(const ParametricCurve& base, double tol = kDefaultArcTol);

/// The iterated involute tower of a unit circular arc subtending theta:
/// curves[0] is the arc, curves[k+1] the involute of curves[k], all starting
/// at the arc's free end.
struct InvoluteTower {
    double theta = 0.0;
    int depth = 0;
    std::vector<ParametricCurve> curves;   // size depth + 1
    std::vector<Point2> endpoints;         // curve k at t = theta
    std::vector<double> segment_lengths;   // |A_{k-1} A_k|, size depth
};

/// Unit arc x = sin(phi + t), y = cos(phi + t) on [0, theta] with
/// phi = pi/2 - theta, so the string attachment point sits at t = 0.
ParametricCurve unit_arc(double theta);

/// Builds the tower. Requires 0 < theta <= pi/2 and 0 <= depth <= kMaxTowerDepth.
InvoluteTower build_tower(double theta, int depth, double tol = kDefaultArcTol);

/// n points at uniform parameter spacing over the domain, endpoints included.
std::vector<std::pair<double, Point2>> sample(const ParametricCurve& curve, int n);

} // namespace involute
