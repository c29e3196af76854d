#pragma once

#include <cmath>
#include <stdexcept>

namespace involute {

/// Plane vector / point with the usual componentwise arithmetic.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2 operator-() const { return {-x, -y}; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }

    Vec2 normalized() const {
        const double n = norm();
        return {x / n, y / n};
    }

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

using Point2 = Vec2;

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline double distance(const Point2& a, const Point2& b) { return (a - b).norm(); }

/// Unsigned angle between two nonzero vectors, in [0, pi].
inline double angle_between(const Vec2& a, const Vec2& b) {
    return std::atan2(std::fabs(a.cross(b)), a.dot(b));
}

/// Closed parameter interval [a, b] with a < b.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
            throw std::invalid_argument("Interval requires finite a < b");
    }

    double length() const { return b - a; }
    bool contains(double t) const { return t >= a && t <= b; }
    double clamp(double t) const { return std::min(std::max(t, a), b); }
};

} // namespace involute
