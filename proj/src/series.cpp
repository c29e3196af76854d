#include "involute/series.hpp"

#include <cmath>
#include <stdexcept>

namespace involute::series {

double factorial(int k) {
    if (k < 0) throw std::invalid_argument("factorial of negative integer");
    static const double table[] = {
        1.0, 1.0, 2.0, 6.0, 24.0, 120.0, 720.0, 5040.0, 40320.0, 362880.0,
        3628800.0, 39916800.0, 479001600.0, 6227020800.0, 87178291200.0,
        1307674368000.0, 20922789888000.0, 355687428096000.0,
        6402373705728000.0, 121645100408832000.0, 2432902008176640000.0};
    if (k <= 20) return table[k];
    double r = table[20];
    for (int i = 21; i <= k; ++i) r *= i;
    return r;
}

double partial_cos(int n, double t) {
    if (n < 0) throw std::invalid_argument("partial_cos order must be >= 0");
    double sum = 1.0;
    double term = 1.0;
    for (int i = 1; i <= n; ++i) {
        term *= -(t * t) / ((2 * i - 1) * (2 * i));
        sum += term;
    }
    return sum;
}

double partial_sin(int n, double t) {
    if (n < 0) throw std::invalid_argument("partial_sin order must be >= 0");
    if (n == 0) return 0.0;
    double sum = t;
    double term = t;
    for (int i = 1; i < n; ++i) {
        term *= -(t * t) / ((2 * i) * (2 * i + 1));
        sum += term;
    }
    return sum;
}

Point2 ClosedFormInvolute::evaluate(double t) const {
    const double c = partial_cos(cos_order, t);
    const double s = partial_sin(sin_order, t);
    const double sf = std::sin(phi + t);
    const double cf = std::cos(phi + t);
    return {c * sf - s * cf, c * cf + s * sf};
}

ParametricCurve ClosedFormInvolute::as_curve(double t_end) const {
    return ParametricCurve(Interval(0.0, t_end),
                           [cf = *this](double t) { return cf.evaluate(t); });
}

ClosedFormInvolute closed_form_involute(int k, double phi) {
    if (k < 1)
        throw std::invalid_argument(
            "closed_form_involute needs k >= 1; level 0 is the base arc "
            "(sin(phi+t), cos(phi+t)) itself");
    if (k % 2 == 1) {
        const int n = (k + 1) / 2;
        return {k, phi, n - 1, n};
    }
    const int n = k / 2;
    return {k, phi, n, n};
}

Point2 tower_endpoint(int k, double theta) {
    if (k < 0) throw std::invalid_argument("tower level must be >= 0");
    if (k == 0) return {1.0, 0.0};
    if (k % 2 == 1) {
        const int n = (k + 1) / 2;
        return {partial_cos(n - 1, theta), partial_sin(n, theta)};
    }
    const int n = k / 2;
    return {partial_cos(n, theta), partial_sin(n, theta)};
}

double segment_length(int k, double theta) {
    if (k < 1) throw std::invalid_argument("segment index must be >= 1");
    return std::pow(theta, k) / factorial(k);
}

double remainder_bound(int k, double theta) {
    if (k < 0) throw std::invalid_argument("tower level must be >= 0");
    return 2.0 * std::pow(theta, k + 1) / factorial(k + 1);
}

} // namespace involute::series
