#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "involute/errors.hpp"
#include "involute/geometry.hpp"
#include "involute/jet.hpp"

namespace involute {

/// Speed at or below this is treated as a vanishing tangent.
inline constexpr double kSpeedEpsilon = 1e-12;
/// Offset used to recover the one-sided limit direction at a flat point.
inline constexpr double kTangentLimitStep = 1e-6;
/// Default absolute tolerance for arc-length quadrature.
inline constexpr double kDefaultArcTol = 1e-10;

/// A plane parametric curve over a closed interval. The position map is
/// mandatory; an analytic derivative and a Taylor (jet) evaluator are
/// optional capabilities. Missing derivatives fall back to central finite
/// differences. Immutable after construction and cheap to copy.
class ParametricCurve {
public:
    using PositionFn = std::function<Point2(double)>;
    using DerivativeFn = std::function<Vec2(double)>;
    using TaylorFn = std::function<JetVec2(double, int)>;

    ParametricCurve(Interval domain, PositionFn position,
                    std::optional<DerivativeFn> derivative = std::nullopt);

    /// Curve defined by a Taylor evaluator; position and derivative are
    /// read off the jet coefficients.
    ParametricCurve(Interval domain, TaylorFn taylor);

    const Interval& domain() const { return domain_; }

    /// Position at t. Throws std::domain_error outside [a, b] and
    /// NumericError if the point is not finite.
    Point2 position(double t) const;

    /// dP/dt at t: analytic if supplied, otherwise from the jet evaluator,
    /// otherwise central differences with h = max(1e-6, 1e-6*|t|),
    /// one-sided at the domain endpoints.
    Vec2 derivative(double t) const;

    bool has_analytic_derivative() const { return derivative_.has_value(); }
    bool has_taylor() const { return static_cast<bool>(taylor_); }

    /// Taylor coefficients of the position about t, up to the given order.
    /// Requires has_taylor().
    JetVec2 taylor(double t, int order) const;

private:
    void check_domain(double t) const;

    Interval domain_;
    PositionFn position_;
    std::optional<DerivativeFn> derivative_;
    TaylorFn taylor_;
};

/// |dP/dt| at t; the arc-length integrand.
double speed(const ParametricCurve& curve, double t);

/// Unit tangent at t. Where the speed is at or below kSpeedEpsilon the
/// direction is recovered as a one-sided limit by stepping kTangentLimitStep
/// into the domain; if the speed stays degenerate over the probed
/// neighborhood, throws DegenerateCurveError.
Vec2 unit_tangent(const ParametricCurve& curve, double t);

/// Arc length from the domain start a to t, by adaptive Simpson quadrature
/// with error estimate |S_fine - S_coarse|/15, to absolute tolerance tol.
double arc_length(const ParametricCurve& curve, double t, double tol = kDefaultArcTol);

/// Arc length over an arbitrary subinterval [t0, t1] of the domain.
double arc_length_between(const ParametricCurve& curve, double t0, double t1,
                          double tol = kDefaultArcTol);

/// Cumulative arc length cached at uniform breakpoints, with cubic Hermite
/// interpolation in between (the speed at the breakpoints supplies the
/// slopes). Lookups are O(log n) and keep the stated tolerance for smooth
/// curves.
class ArcLengthTable {
public:
    ArcLengthTable(ParametricCurve curve, double tol = kDefaultArcTol,
                   int segments = 256);

    /// s(t), the arc length from the domain start to t.
    double operator()(double t) const;

    double total() const { return cumulative_.back(); }
    double tolerance() const { return tol_; }
    const ParametricCurve& source() const { return curve_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& cumulative() const { return cumulative_; }

private:
    ParametricCurve curve_;
    double tol_;
    std::vector<double> breakpoints_;
    std::vector<double> cumulative_;
    std::vector<double> speeds_;
};

} // namespace involute
