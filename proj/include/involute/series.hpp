#pragma once

#include "involute/curve.hpp"
#include "involute/geometry.hpp"

namespace involute::series {

/// k! exactly for k <= 20 (fits in a double without rounding), as a
/// floating-point product beyond that.
double factorial(int k);

/// Truncated cosine series: sum_{i=0}^{n} (-1)^i t^{2i}/(2i)!  (n+1 terms).
double partial_cos(int n, double t);

/// Truncated sine series: sum_{i=0}^{n-1} (-1)^i t^{2i+1}/(2i+1)!  (n terms).
double partial_sin(int n, double t);

/// Closed form of the k-th tower curve against the rotating frame
/// {sin(phi+t), cos(phi+t)}:
///   k = 2n-1:  x = C_{n-1} sin(phi+t) - S_n cos(phi+t),
///              y = C_{n-1} cos(phi+t) + S_n sin(phi+t)
///   k = 2n:    the same with C_n and S_n.
struct ClosedFormInvolute {
    int level;
    double phi;
    int cos_order;  // n-index of the C factor
    int sin_order;  // n-index of the S factor

    Point2 evaluate(double t) const;
    ParametricCurve as_curve(double t_end) const;
};

/// Requires k >= 1; for k = 0 use the base arc parametrization instead
/// (throws std::invalid_argument saying so).
ClosedFormInvolute closed_form_involute(int k, double phi);

/// A_k in the arc's frame: (C_{n-1}(theta), S_n(theta)) for k = 2n-1,
/// (C_n(theta), S_n(theta)) for k = 2n, and (1, 0) for k = 0.
Point2 tower_endpoint(int k, double theta);

/// |A_{k-1} A_k| = theta^k / k!, for k >= 1.
double segment_length(int k, double theta);

/// Upper bound 2 theta^{k+1}/(k+1)! on |A_k - (cos theta, sin theta)| for
/// theta <= pi/2, from the alternating-series estimate on each coordinate.
double remainder_bound(int k, double theta);

} // namespace involute::series
