#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "involute/geometry.hpp"

namespace involute {

/// Truncated Taylor expansion of a scalar function about a point:
/// coefficient i multiplies h^i, where h is the offset from the expansion
/// point. Arithmetic on these propagates exact derivatives through function
/// composition, which keeps iterated constructions free of finite-difference
/// noise.
class Jet {
public:
    explicit Jet(int order) : c_(static_cast<std::size_t>(order) + 1, 0.0) {
        if (order < 0) throw std::invalid_argument("Jet order must be >= 0");
    }

    static Jet constant(double v, int order) {
        Jet j(order);
        j.c_[0] = v;
        return j;
    }

    /// The identity function t -> t expanded about t0.
    static Jet variable(double t0, int order) {
        Jet j(order);
        j.c_[0] = t0;
        if (order >= 1) j.c_[1] = 1.0;
        return j;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    double value() const { return c_[0]; }

    Jet truncated(int order) const {
        Jet r(order);
        const int m = std::min(order, this->order());
        for (int i = 0; i <= m; ++i) r[i] = c_[static_cast<std::size_t>(i)];
        return r;
    }

    Jet operator+(const Jet& o) const {
        Jet r(common_order(o));
        for (int i = 0; i <= r.order(); ++i) r[i] = (*this)[i] + o[i];
        return r;
    }

    Jet operator-(const Jet& o) const {
        Jet r(common_order(o));
        for (int i = 0; i <= r.order(); ++i) r[i] = (*this)[i] - o[i];
        return r;
    }

    Jet operator-() const {
        Jet r(order());
        for (int i = 0; i <= order(); ++i) r[i] = -(*this)[i];
        return r;
    }

    Jet operator*(const Jet& o) const {
        Jet r(common_order(o));
        for (int i = 0; i <= r.order(); ++i) {
            double acc = 0.0;
            for (int j = 0; j <= i; ++j) acc += (*this)[j] * o[i - j];
            r[i] = acc;
        }
        return r;
    }

    Jet operator*(double s) const {
        Jet r(order());
        for (int i = 0; i <= order(); ++i) r[i] = (*this)[i] * s;
        return r;
    }

    Jet operator/(const Jet& o) const {
        if (o[0] == 0.0) throw std::domain_error("Jet division by zero constant term");
        Jet r(common_order(o));
        for (int i = 0; i <= r.order(); ++i) {
            double acc = (*this)[i];
            for (int j = 0; j < i; ++j) acc -= r[j] * o[i - j];
            r[i] = acc / o[0];
        }
        return r;
    }

private:
    int common_order(const Jet& o) const {
        if (order() != o.order())
            throw std::invalid_argument("Jet order mismatch");
        return order();
    }

    std::vector<double> c_;
};

inline Jet operator*(double s, const Jet& j) { return j * s; }

/// Coefficients of the derivative; result has one order less.
inline Jet jet_derivative(const Jet& f) {
    if (f.order() == 0) return Jet::constant(0.0, 0);
    Jet r(f.order() - 1);
    for (int i = 1; i <= f.order(); ++i) r[i - 1] = f[i] * i;
    return r;
}

/// Antiderivative with the given constant term; result has one order more.
inline Jet jet_antiderivative(const Jet& f, double c0) {
    Jet r(f.order() + 1);
    r[0] = c0;
    for (int i = 0; i <= f.order(); ++i) r[i + 1] = f[i] / (i + 1);
    return r;
}

inline Jet jet_sqrt(const Jet& f) {
    if (!(f[0] > 0.0)) throw std::domain_error("Jet sqrt of non-positive constant term");
    Jet r(f.order());
    r[0] = std::sqrt(f[0]);
    for (int i = 1; i <= f.order(); ++i) {
        double acc = f[i];
        for (int j = 1; j < i; ++j) acc -= r[j] * r[i - j];
        r[i] = acc / (2.0 * r[0]);
    }
    return r;
}

/// Simultaneous sine and cosine by the standard Taylor recurrence.
inline void jet_sincos(const Jet& u, Jet& s, Jet& c) {
    const int m = u.order();
    s = Jet(m);
    c = Jet(m);
    s[0] = std::sin(u[0]);
    c[0] = std::cos(u[0]);
    for (int i = 1; i <= m; ++i) {
        double as = 0.0, ac = 0.0;
        for (int j = 1; j <= i; ++j) {
            as += j * u[j] * c[i - j];
            ac += j * u[j] * s[i - j];
        }
        s[i] = as / i;
        c[i] = -ac / i;
    }
}

inline Jet jet_sin(const Jet& u) {
    Jet s(u.order()), c(u.order());
    jet_sincos(u, s, c);
    return s;
}

inline Jet jet_cos(const Jet& u) {
    Jet s(u.order()), c(u.order());
    jet_sincos(u, s, c);
    return c;
}

/// Pair of jets for the two coordinates of a plane curve.
struct JetVec2 {
    Jet x;
    Jet y;

    JetVec2(Jet x_, Jet y_) : x(std::move(x_)), y(std::move(y_)) {}

    Vec2 value() const { return {x.value(), y.value()}; }
    Vec2 first_derivative() const {
        if (x.order() < 1) throw std::invalid_argument("JetVec2 order too low for derivative");
        return {x[1], y[1]};
    }
};

} // namespace involute
