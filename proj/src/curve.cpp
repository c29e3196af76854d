#include "involute/curve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace involute {

ParametricCurve::ParametricCurve(Interval domain, PositionFn position,
                                 std::optional<DerivativeFn> derivative)
    : domain_(domain), position_(std::move(position)),
      derivative_(std::move(derivative)) {
    if (!position_) throw std::invalid_argument("ParametricCurve needs a position map");
}

ParametricCurve::ParametricCurve(Interval domain, TaylorFn taylor)
    : domain_(domain), taylor_(std::move(taylor)) {
    if (!taylor_) throw std::invalid_argument("ParametricCurve needs a Taylor evaluator");
    position_ = [fn = taylor_](double t) { return fn(t, 0).value(); };
    derivative_ = [fn = taylor_](double t) { return fn(t, 1).first_derivative(); };
}

void ParametricCurve::check_domain(double t) const {
    if (!std::isfinite(t) || !domain_.contains(t)) {
        std::ostringstream msg;
        msg << "parameter " << t << " outside domain [" << domain_.a << ", "
            << domain_.b << "]";
        throw std::domain_error(msg.str());
    }
}

Point2 ParametricCurve::position(double t) const {
    check_domain(t);
    const Point2 p = position_(t);
    if (!p.finite()) throw NumericError("non-finite curve position", t);
    return p;
}

Vec2 ParametricCurve::derivative(double t) const {
    check_domain(t);
    if (derivative_) {
        const Vec2 v = (*derivative_)(t);
        if (!v.finite()) throw NumericError("non-finite curve derivative", t);
        return v;
    }
    // Central finite differences, one-sided at the endpoints.
    const double h = std::max(1e-6, 1e-6 * std::fabs(t));
    const double lo = domain_.a, hi = domain_.b;
    double t0 = t - h, t1 = t + h;
    if (t0 < lo) { t0 = t; t1 = std::min(t + h, hi); }
    if (t1 > hi) { t1 = t; t0 = std::max(t - h, lo); }
    const Point2 p0 = position(t0);
    const Point2 p1 = position(t1);
    return (p1 - p0) / (t1 - t0);
}

JetVec2 ParametricCurve::taylor(double t, int order) const {
    check_domain(t);
    if (!taylor_) throw std::logic_error("curve has no Taylor evaluator");
    return taylor_(t, order);
}

double speed(const ParametricCurve& curve, double t) {
    const Vec2 v = curve.derivative(t);
    return v.norm();
}

Vec2 unit_tangent(const ParametricCurve& curve, double t) {
    Vec2 v = curve.derivative(t);
    double n = v.norm();
    if (n > kSpeedEpsilon) return v / n;
    // Flat point: probe one-sided limit directions stepping into the domain.
    const Interval& dom = curve.domain();
    const double dir = (t + kTangentLimitStep <= dom.b) ? 1.0 : -1.0;
    for (int i = 1; i <= 8; ++i) {
        const double u = dom.clamp(t + dir * i * kTangentLimitStep);
        v = curve.derivative(u);
        n = v.norm();
        if (n > kSpeedEpsilon) return v / n;
    }
    throw DegenerateCurveError("curve speed vanishes on a neighborhood; no tangent direction");
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double fa, double b, double fb, double m, double fm,
                        double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, flm);
    const double right = simpson(f, m, fm, b, fb, frm);
    const double err = (left + right - whole) / 15.0;
    if (depth <= 0 || std::fabs(err) <= tol)
        return left + right + err;
    return adaptive_simpson(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson(f, a, fa, b, fb, fm);
    return adaptive_simpson(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

} // namespace

double arc_length_between(const ParametricCurve& curve, double t0, double t1,
                          double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("arc_length tolerance must be positive");
    if (!curve.domain().contains(t0) || !curve.domain().contains(t1))
        throw std::domain_error("arc_length parameter outside curve domain");
    const double sign = (t1 >= t0) ? 1.0 : -1.0;
    const double lo = std::min(t0, t1), hi = std::max(t0, t1);
    auto integrand = [&](double u) {
        const double s = speed(curve, u);
        if (!std::isfinite(s)) throw NumericError("non-finite arc-length integrand", u);
        return s;
    };
    return sign * integrate(integrand, lo, hi, tol);
}

double arc_length(const ParametricCurve& curve, double t, double tol) {
    return arc_length_between(curve, curve.domain().a, t, tol);
}

ArcLengthTable::ArcLengthTable(ParametricCurve curve, double tol, int segments)
    : curve_(std::move(curve)), tol_(tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("ArcLengthTable tolerance must be positive");
    if (segments < 1) throw std::invalid_argument("ArcLengthTable needs >= 1 segment");
    const Interval dom = curve_.domain();
    breakpoints_.resize(segments + 1);
    cumulative_.resize(segments + 1);
    speeds_.resize(segments + 1);
    const double h = dom.length() / segments;
    // Split the tolerance across segments so the cumulative error stays
    // within tol at every breakpoint.
    const double seg_tol = 0.25 * tol / segments;
    breakpoints_[0] = dom.a;
    cumulative_[0] = 0.0;
    speeds_[0] = speed(curve_, dom.a);
    for (int i = 1; i <= segments; ++i) {
        breakpoints_[i] = (i == segments) ? dom.b : dom.a + i * h;
        speeds_[i] = speed(curve_, breakpoints_[i]);
        cumulative_[i] = cumulative_[i - 1] +
            arc_length_between(curve_, breakpoints_[i - 1], breakpoints_[i], seg_tol);
    }
}

double ArcLengthTable::operator()(double t) const {
    const Interval& dom = curve_.domain();
    if (!dom.contains(t)) throw std::domain_error("ArcLengthTable lookup outside domain");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin());
    if (i == 0) return 0.0;
    if (i >= breakpoints_.size()) return cumulative_.back();
    --i;
    const double t0 = breakpoints_[i], t1 = breakpoints_[i + 1];
    const double h = t1 - t0;
    const double u = (t - t0) / h;
    // Cubic Hermite: values cumulative_[i..i+1], slopes speeds_[i..i+1].
    const double s0 = cumulative_[i], s1 = cumulative_[i + 1];
    const double m0 = speeds_[i] * h, m1 = speeds_[i + 1] * h;
    const double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * s0 + (u3 - 2 * u2 + u) * m0 +
           (-2 * u3 + 3 * u2) * s1 + (u3 - u2) * m1;
}

} // namespace involute
