#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "involute/errors.hpp"
#include "involute/geometry.hpp"

namespace involute::symbolic {

/// Exact rational with arbitrary-precision numerator/denominator, always
/// kept reduced.
using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial in t with exact rational coefficients, canonical
/// (no trailing zero coefficients).
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);
    static RationalPoly monomial(const Rational& coeff, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator-() const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly operator*(const Rational& s) const;
    bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

    RationalPoly derivative() const;
    /// Antiderivative with zero constant term (exact).
    RationalPoly antiderivative() const;

    double evaluate(double t) const;
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Coefficients of the cosine partial sum C_n (degree 2n).
RationalPoly cos_partial_poly(int n);
/// Coefficients of the sine partial sum S_n (degree 2n-1; zero for n = 0).
RationalPoly sin_partial_poly(int n);

/// Expression p(t) sin(phi+t) + q(t) cos(phi+t). This class is closed under
/// differentiation and under the involute map, which is what makes the
/// whole tower exactly computable.
struct TrigPolyExpr {
    RationalPoly p;  // coefficient of sin(phi+t)
    RationalPoly q;  // coefficient of cos(phi+t)

    bool operator==(const TrigPolyExpr& o) const { return p == o.p && q == o.q; }
    double evaluate(double phi, double t) const;
    std::string to_string() const;
};

/// d/dt [p sin(phi+t) + q cos(phi+t)] = (p' - q) sin(phi+t) + (p + q') cos(phi+t).
TrigPolyExpr differentiate(const TrigPolyExpr& e);

struct TrigPolyCurve {
    TrigPolyExpr x;
    TrigPolyExpr y;

    bool operator==(const TrigPolyCurve& o) const { return x == o.x && y == o.y; }
    Point2 evaluate(double phi, double t) const;
};

/// Common monomial c t^d of the differentiated coordinates, so the speed is
/// |c| t^d exactly. Accepts both frame parities
///   x' = c t^d sin(phi+t),  y' = +-c t^d cos(phi+t)   and
///   x' = c t^d cos(phi+t),  y' = +-c t^d sin(phi+t);
/// c is reported as the x' coefficient. Throws NotInClosureError when the
/// derivative does not collapse to this form.
struct SpeedMonomial {
    int degree;
    Rational coeff;
};
SpeedMonomial monomial_speed(const TrigPolyCurve& curve);

/// Exact involute: arc length integrates the monomial speed to
/// |c| t^{d+1}/(d+1), and subtracting s(t) times the unit tangent lands back
/// in the same expression class.
TrigPolyCurve symbolic_involute(const TrigPolyCurve& curve);

/// Exact closed form of tower level k (k = 0 is the base arc).
TrigPolyCurve tower_curve(int k);

struct InductionStep {
    int from = 0;
    int to = 0;
    bool pass = false;
    int arc_degree = 0;        // degree of the arc-length monomial s(t)
    Rational arc_coeff;        // its coefficient
    TrigPolyCurve computed;    // involute of the level-`from` closed form
    std::vector<std::string> diffs;  // coefficient mismatches, empty on pass
};

struct ProofReport {
    int max_k = 0;
    bool pass = false;
    std::vector<InductionStep> steps;

    /// Transcript-style rendering: one block per step with the resulting
    /// involute equations and the arc-length monomial.
    std::string to_text() const;
    /// JSON with per-step k, pass, s-monomial, and coefficient diffs.
    std::string to_json() const;
};

/// For k = 1..max_k: builds the exact closed form of level k, applies
/// symbolic_involute, and checks coefficient-wise equality against the
/// level k+1 closed form.
ProofReport verify_induction(int max_k);

} // namespace involute::symbolic
