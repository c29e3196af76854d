#include "involute/involute.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace involute {

namespace {

/// Involute Taylor coefficients at t, to the requested order. Needs the
/// base expanded one order higher to recover the velocity jet. Where the
/// speed is numerically zero the tangent factor is frozen to the one-sided
/// limit direction; the string length s(t) is negligible there, so the
/// frozen direction contributes O(s) at most.
/// Limit of the unit tangent at a point where the speed vanishes, taken from
/// the first nonzero coefficient of the velocity jet: near t the velocity is
/// c_j (u-t)^j + O((u-t)^{j+1}), so the direction tends to +-c_j/|c_j|.
Vec2 jet_limit_direction(const ParametricCurve& base, double t) {
    const int probe = kMaxTowerDepth + 2;
    const JetVec2 b = base.taylor(t, probe);
    const Jet vx = jet_derivative(b.x);
    const Jet vy = jet_derivative(b.y);
    // Approach from inside the domain; from the left, odd powers flip sign.
    const bool from_right = t < base.domain().b;
    for (int j = 0; j < probe; ++j) {
        const Vec2 c{vx[j], vy[j]};
        const double n = c.norm();
        if (n > kSpeedEpsilon) {
            const double sign = (from_right || j % 2 == 0) ? 1.0 : -1.0;
            return c * (sign / n);
        }
    }
    throw DegenerateCurveError(
        "curve speed vanishes to high order; no tangent direction");
}

JetVec2 involute_jet(const ParametricCurve& base, const ArcLengthTable& table,
                     double t, int order) {
    const JetVec2 b = base.taylor(t, order + 1);
    const Jet vx = jet_derivative(b.x);
    const Jet vy = jet_derivative(b.y);
    const Jet sp = [&] {
        Jet sq = vx * vx + vy * vy;
        if (sq[0] <= kSpeedEpsilon * kSpeedEpsilon) return Jet::constant(0.0, order);
        return jet_sqrt(sq);
    }();

    // s(t): value from the cached table, higher coefficients from the speed.
    Jet s(order);
    s[0] = table(t);
    for (int j = 1; j <= order; ++j) s[j] = sp[j - 1] / j;

    Jet tx(order), ty(order);
    if (sp[0] <= kSpeedEpsilon) {
        const Vec2 dir = jet_limit_direction(base, t);
        tx = Jet::constant(dir.x, order);
        ty = Jet::constant(dir.y, order);
    } else {
        tx = vx / sp;
        ty = vy / sp;
    }
    return {b.x.truncated(order) - s * tx, b.y.truncated(order) - s * ty};
}

} // namespace

InvoluteCurve involute(const ParametricCurve& base, double tol) {
    auto table = std::make_shared<const ArcLengthTable>(base, tol);
    const Interval dom = base.domain();
    ParametricCurve curve = base.has_taylor()
        ? ParametricCurve(dom,
              [base, table](double t, int order) {
                  return involute_jet(base, *table, t, order);
              })
        : ParametricCurve(dom, [base, table](double t) {
              const Point2 p = base.position(t);
              const double s = (*table)(t);
              if (s <= kSpeedEpsilon) return p;
              return p - s * unit_tangent(base, t);
          });
    return {std::move(curve), base, std::move(table)};
}

ParametricCurve unit_arc(double theta) {
    const double phi = std::numbers::pi / 2.0 - theta;
    return ParametricCurve(Interval(0.0, theta), [phi](double t, int order) {
        const Jet u = Jet::variable(phi + t, order);
        Jet s(order), c(order);
        jet_sincos(u, s, c);
        return JetVec2{s, c};
    });
}

InvoluteTower build_tower(double theta, int depth, double tol) {
    if (!(theta > 0.0) || theta > std::numbers::pi / 2.0 + 1e-15) {
        std::ostringstream msg;
        msg << "tower theta must lie in (0, pi/2], got " << theta;
        throw std::domain_error(msg.str());
    }
    if (depth < 0) throw std::invalid_argument("tower depth must be >= 0");
    if (depth > kMaxTowerDepth) {
        std::ostringstream msg;
        msg << "tower depth " << depth << " exceeds the maximum " << kMaxTowerDepth;
        throw DepthLimitError(msg.str());
    }

    InvoluteTower tower;
    tower.theta = theta;
    tower.depth = depth;
    tower.curves.push_back(unit_arc(theta));
    for (int k = 0; k < depth; ++k)
        tower.curves.push_back(involute(tower.curves.back(), tol).curve);
    for (const ParametricCurve& c : tower.curves)
        tower.endpoints.push_back(c.position(theta));
    for (int k = 1; k <= depth; ++k)
        tower.segment_lengths.push_back(
            distance(tower.endpoints[k - 1], tower.endpoints[k]));
    return tower;
}

std::vector<std::pair<double, Point2>> sample(const ParametricCurve& curve, int n) {
    if (n < 2) throw std::invalid_argument("sample needs n >= 2");
    const Interval dom = curve.domain();
    std::vector<std::pair<double, Point2>> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = (i == n - 1)
            ? dom.b
            : dom.a + dom.length() * i / (n - 1);
        pts.emplace_back(t, curve.position(t));
    }
    return pts;
}

} // namespace involute
