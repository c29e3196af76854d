#include <doctest.h>

#include <cmath>
#include <numbers>

#include "involute/involute.hpp"
#include "involute/series.hpp"

using namespace involute;

namespace {

constexpr double kPi = std::numbers::pi;

ParametricCurve unit_circle() {
    return ParametricCurve(Interval(0.0, 2 * kPi), [](double t, int order) {
        const Jet u = Jet::variable(t, order);
        Jet s(order), c(order);
        jet_sincos(u, s, c);
        return JetVec2{c, s};
    });
}

} // namespace

TEST_CASE("involute of the unit circle is (cos t + t sin t, sin t - t cos t)") {
    const InvoluteCurve inv = involute::involute(unit_circle());
    for (int i = 0; i <= 64; ++i) {
        const double t = 2 * kPi * i / 64;
        const Point2 p = inv.curve.position(t);
        CHECK(std::fabs(p.x - (std::cos(t) + t * std::sin(t))) <= 1e-9);
        CHECK(std::fabs(p.y - (std::sin(t) - t * std::cos(t))) <= 1e-9);
    }
}

TEST_CASE("involute of the unit arc matches the first-involute equations") {
    const double theta = 1.0;
    const double phi = kPi / 2 - theta;
    const InvoluteCurve inv = involute::involute(unit_arc(theta));
    for (int i = 0; i <= 20; ++i) {
        const double t = theta * i / 20;
        const Point2 p = inv.curve.position(t);
        CHECK(std::fabs(p.x - (std::sin(phi + t) - t * std::cos(phi + t))) <= 1e-10);
        CHECK(std::fabs(p.y - (std::cos(phi + t) + t * std::sin(phi + t))) <= 1e-10);
    }
}

TEST_CASE("involute starts at the base point") {
    const InvoluteCurve inv = involute::involute(unit_arc(0.8));
    const Point2 a = inv.base.position(0.0);
    const Point2 b = inv.curve.position(0.0);
    CHECK(distance(a, b) <= 1e-14);
}

TEST_CASE("tower endpoints for shallow depths") {
    const double theta = 0.9;
    const InvoluteTower tower = build_tower(theta, 2);
    CHECK(distance(tower.endpoints[0], {1.0, 0.0}) <= 1e-12);
    CHECK(distance(tower.endpoints[1], {1.0, theta}) <= 1e-10);
    CHECK(distance(tower.endpoints[2], {1.0 - theta * theta / 2, theta}) <= 1e-10);
    CHECK(tower.segment_lengths[0] == doctest::Approx(theta).epsilon(1e-10));
    CHECK(tower.segment_lengths[1] ==
          doctest::Approx(theta * theta / 2).epsilon(1e-9));
}

TEST_CASE("depth-0 tower is just the arc") {
    const InvoluteTower tower = build_tower(1.0, 0);
    CHECK(tower.curves.size() == 1);
    CHECK(distance(tower.endpoints[0], {1.0, 0.0}) <= 1e-12);
    CHECK(tower.segment_lengths.empty());
}

TEST_CASE("tower argument validation") {
    CHECK_THROWS_AS(build_tower(0.0, 3), std::domain_error);
    CHECK_THROWS_AS(build_tower(2.0, 3), std::domain_error);
    CHECK_THROWS_AS(build_tower(1.0, kMaxTowerDepth + 1), DepthLimitError);
    CHECK_THROWS_AS(build_tower(1.0, -1), std::invalid_argument);
}

TEST_CASE("sample spacing and endpoints") {
    const double theta = 0.7;
    const ParametricCurve arc = unit_arc(theta);
    const auto two = sample(arc, 2);
    CHECK(two.front().first == 0.0);
    CHECK(two.back().first == theta);
    CHECK(distance(two.back().second, {1.0, 0.0}) <= 1e-12);

    const auto five = sample(unit_circle(), 5);
    for (int i = 0; i < 5; ++i)
        CHECK(five[i].first == doctest::Approx(i * kPi / 2).epsilon(1e-15));

    CHECK_THROWS_AS(sample(arc, 1), std::invalid_argument);
}

TEST_CASE("middle sample of the first involute matches its equations") {
    const double theta = 1.0;
    const double phi = kPi / 2 - theta;
    const InvoluteCurve inv = involute::involute(unit_arc(theta));
    const auto pts = sample(inv.curve, 3);
    const double t = pts[1].first;
    CHECK(t == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pts[1].second.x ==
          doctest::Approx(std::sin(phi + t) - t * std::cos(phi + t)).epsilon(1e-12));
    CHECK(pts[1].second.y ==
          doctest::Approx(std::cos(phi + t) + t * std::sin(phi + t)).epsilon(1e-12));
}

TEST_CASE("taut-string and tangency invariants hold on every tower level") {
    const double theta = 1.0;
    const InvoluteTower tower = build_tower(theta, 5);
    for (int k = 1; k <= 5; ++k) {
        const ParametricCurve& base = tower.curves[k - 1];
        const InvoluteCurve level = involute::involute(base);
        for (int i = 1; i <= 25; ++i) {
            const double t = theta * i / 25;
            const Point2 bp = base.position(t);
            const Point2 ip = level.curve.position(t);
            const double s = arc_length(base, t);
            CHECK(std::fabs(distance(bp, ip) - s) <= 2e-10);
            if (s > 1e-9) {
                const double angle = angle_between(bp - ip, unit_tangent(base, t));
                CHECK(angle <= 1e-6);
            }
        }
    }
}

TEST_CASE("tower curves match the closed forms everywhere") {
    for (double theta : {0.3, 1.0, kPi / 3}) {
        const double phi = kPi / 2 - theta;
        const InvoluteTower tower = build_tower(theta, 6);
        for (int k = 1; k <= 6; ++k) {
            const auto cf = series::closed_form_involute(k, phi);
            for (const auto& [t, p] : sample(tower.curves[k], 17))
                CHECK(distance(p, cf.evaluate(t)) <= 1e-7);
        }
    }
}

TEST_CASE("speed of level k grows as t^k/k!") {
    const double theta = 1.0;
    const InvoluteTower tower = build_tower(theta, 6);
    for (int k = 0; k <= 6; ++k) {
        for (int i = 2; i <= 10; ++i) {
            const double t = theta * i / 10;
            const double expected = std::pow(t, k) / series::factorial(k);
            CHECK(std::fabs(speed(tower.curves[k], t) - expected) <= 1e-7);
        }
    }
}

TEST_CASE("involute of a position-only curve still satisfies the string property") {
    // No analytic derivative and no Taylor evaluator: exercises the
    // finite-difference fallback path end to end.
    ParametricCurve circle(Interval(0.0, 2 * kPi),
                           [](double t) { return Point2{std::cos(t), std::sin(t)}; });
    const InvoluteCurve inv = involute::involute(circle, 1e-8);
    for (int i = 1; i <= 16; ++i) {
        const double t = 2 * kPi * i / 16;
        const Point2 p = inv.curve.position(t);
        CHECK(std::fabs(p.x - (std::cos(t) + t * std::sin(t))) <= 1e-4);
        CHECK(std::fabs(p.y - (std::sin(t) - t * std::cos(t))) <= 1e-4);
    }
}
