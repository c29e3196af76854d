#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "involute/curve.hpp"

using namespace involute;

namespace {

constexpr double kPi = std::numbers::pi;

ParametricCurve unit_speed_arc(double phi, double theta) {
    return ParametricCurve(
        Interval(0.0, theta),
        [phi](double t) { return Point2{std::sin(phi + t), std::cos(phi + t)}; },
        [phi](double t) { return Vec2{std::cos(phi + t), -std::sin(phi + t)}; });
}

// First involute of the arc, with its analytic derivative (speed t).
ParametricCurve first_involute(double phi, double theta) {
    return ParametricCurve(
        Interval(0.0, theta),
        [phi](double t) {
            return Point2{std::sin(phi + t) - t * std::cos(phi + t),
                          std::cos(phi + t) + t * std::sin(phi + t)};
        },
        [phi](double t) {
            return Vec2{t * std::sin(phi + t), t * std::cos(phi + t)};
        });
}

// Independent quadrature oracle: composite Simpson on a fixed panel count.
double simpson_oracle(const std::function<double(double)>& f, double a, double b,
                      int panels) {
    double acc = f(a) + f(b);
    const double h = (b - a) / panels;
    for (int i = 1; i < panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return acc * h / 3.0;
}

} // namespace

TEST_CASE("speed of the unit-speed arc is 1") {
    auto arc = unit_speed_arc(0.3, 1.2);
    for (double t : {0.0, 0.4, 0.9, 1.2}) CHECK(speed(arc, t) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("speed of the first involute is t") {
    auto c = first_involute(kPi / 2 - 1.0, 1.0);
    CHECK(speed(c, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(speed(c, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("speed of a straight segment is 1") {
    ParametricCurve seg(Interval(0.0, 2.0),
                        [](double t) { return Point2{t, 0.0}; });
    CHECK(speed(seg, 1.3) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("parameter outside the domain is rejected") {
    auto arc = unit_speed_arc(0.0, 1.0);
    CHECK_THROWS_AS(arc.position(-0.1), std::domain_error);
    CHECK_THROWS_AS(speed(arc, 1.5), std::domain_error);
    CHECK_THROWS_AS(arc_length(arc, 2.0), std::domain_error);
}

TEST_CASE("unit tangent of the circle at t=0") {
    ParametricCurve circle(
        Interval(0.0, 2 * kPi),
        [](double t) { return Point2{std::cos(t), std::sin(t)}; },
        [](double t) { return Vec2{-std::sin(t), std::cos(t)}; });
    const Vec2 tan = unit_tangent(circle, 0.0);
    CHECK(tan.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(tan.y == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("unit tangent of the first involute where speed is positive") {
    const double phi = kPi / 2 - 1.0;
    auto c = first_involute(phi, 1.0);
    for (double t : {0.2, 0.7, 1.0}) {
        const Vec2 tan = unit_tangent(c, t);
        CHECK(tan.x == doctest::Approx(std::sin(phi + t)).epsilon(1e-12));
        CHECK(tan.y == doctest::Approx(std::cos(phi + t)).epsilon(1e-12));
        CHECK(tan.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("unit tangent at the flat point is the one-sided limit direction") {
    const double phi = kPi / 2 - 1.0;
    auto c = first_involute(phi, 1.0);
    const Vec2 tan = unit_tangent(c, 0.0);
    // Limit direction (sin phi, cos phi); the fallback evaluates just inside
    // the domain, so agreement is to the size of that step.
    CHECK(tan.x == doctest::Approx(std::sin(phi)).epsilon(1e-5));
    CHECK(tan.y == doctest::Approx(std::cos(phi)).epsilon(1e-5));
}

TEST_CASE("constant curve has no tangent anywhere") {
    ParametricCurve flat(Interval(0.0, 1.0),
                         [](double) { return Point2{1.0, 2.0}; });
    CHECK_THROWS_AS(unit_tangent(flat, 0.5), DegenerateCurveError);
}

TEST_CASE("arc length of the unit arc equals the subtended angle") {
    auto arc = unit_speed_arc(kPi / 2 - 1.2, 1.2);
    CHECK(arc_length(arc, 1.2) == doctest::Approx(1.2).epsilon(1e-10));
    CHECK(arc_length(arc, 0.0) == 0.0);
}

TEST_CASE("arc length of the first involute is t^2/2") {
    auto c = first_involute(kPi / 2 - 1.0, 1.0);
    CHECK(arc_length(c, 1.0) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(arc_length(c, 0.6) == doctest::Approx(0.18).epsilon(1e-10));
}

TEST_CASE("arc length of x=t, y=t^2/2 matches the fixed-panel Simpson oracle") {
    ParametricCurve cubic(
        Interval(0.0, 1.0), [](double t) { return Point2{t, t * t / 2.0}; },
        [](double t) { return Vec2{1.0, t}; });
    auto integrand = [](double u) { return std::sqrt(1.0 + u * u); };
    const double oracle = simpson_oracle(integrand, 0.0, 1.0, 1'000'000);
    const double frozen = 1.1477935746963190;
    CHECK(oracle == doctest::Approx(frozen).epsilon(1e-13));
    CHECK(arc_length(cubic, 1.0) == doctest::Approx(frozen).epsilon(1e-10));
}

TEST_CASE("arc length is additive over subintervals") {
    auto c = first_involute(kPi / 2 - 1.3, 1.3);
    const double tol = 1e-10;
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(0.0, 1.3);
    for (int i = 0; i < 50; ++i) {
        double t1 = dist(rng), t2 = dist(rng);
        if (t1 > t2) std::swap(t1, t2);
        const double whole = arc_length(c, t2, tol);
        const double left = arc_length(c, t1, tol);
        const double mid = arc_length_between(c, t1, t2, tol);
        CHECK(std::fabs(whole - left - mid) <= 2 * tol);
    }
}

TEST_CASE("arc length respects the minimum-speed lower bound") {
    auto arc = unit_speed_arc(0.0, 1.5);  // speed identically 1
    const double tol = 1e-10;
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(0.0, 1.5);
    for (int i = 0; i < 30; ++i) {
        double t1 = dist(rng), t2 = dist(rng);
        if (t1 > t2) std::swap(t1, t2);
        const double s = arc_length_between(arc, t1, t2, tol);
        CHECK(s >= (t2 - t1) - 2 * tol);
    }
}

TEST_CASE("analytic derivative agrees with central differences") {
    const double phi = kPi / 2 - 1.0;
    auto c = first_involute(phi, 1.0);
    const double h = 1e-5;
    for (double t : {0.1, 0.35, 0.62, 0.9}) {
        const Vec2 fd = (c.position(t + h) - c.position(t - h)) / (2 * h);
        const Vec2 an = c.derivative(t);
        CHECK(std::fabs(an.x - fd.x) <= 1e-6);
        CHECK(std::fabs(an.y - fd.y) <= 1e-6);
    }
}

TEST_CASE("non-finite derivative surfaces as a numeric error") {
    ParametricCurve bad(
        Interval(0.0, 1.0), [](double t) { return Point2{t, 0.0}; },
        [](double t) {
            return Vec2{t < 0.5 ? 1.0 : std::numeric_limits<double>::quiet_NaN(), 0.0};
        });
    CHECK_THROWS_AS(arc_length(bad, 1.0), NumericError);
}

TEST_CASE("arc-length table matches direct quadrature and is monotone") {
    auto c = first_involute(kPi / 2 - 1.0, 1.0);
    ArcLengthTable table(c);
    CHECK(table(0.0) == 0.0);
    double prev = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double t = i / 100.0;
        const double s = table(t);
        CHECK(s >= prev);
        CHECK(std::fabs(s - t * t / 2.0) <= 2e-10);
        prev = s;
    }
    CHECK(table.total() == doctest::Approx(0.5).epsilon(1e-10));
}
