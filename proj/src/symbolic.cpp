#include "involute/symbolic.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace involute::symbolic {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

RationalPoly RationalPoly::monomial(const Rational& coeff, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    if (coeff == 0) return {};
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    c.back() = coeff;
    return RationalPoly(std::move(c));
}

void RationalPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
    return *this + (-o);
}

RationalPoly RationalPoly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] += c_[i] * o.c_[j];
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator*(const Rational& s) const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<int>(i);
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::antiderivative() const {
    if (is_zero()) return {};
    std::vector<Rational> c(c_.size() + 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c[i + 1] = c_[i] / static_cast<int>(i + 1);
    return RationalPoly(std::move(c));
}

double RationalPoly::evaluate(double t) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + static_cast<double>(*it);
    return acc;
}

std::string RationalPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const Rational c = coeff(i);
        if (c == 0) continue;
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit = (mag == 1);
        if (i == 0) {
            out << mag;
        } else {
            if (!unit) out << "(" << mag << ")*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

RationalPoly cos_partial_poly(int n) {
    if (n < 0) throw std::invalid_argument("cos partial sum order must be >= 0");
    std::vector<Rational> c(static_cast<std::size_t>(2 * n) + 1);
    Rational term = 1;
    for (int i = 0; i <= n; ++i) {
        c[static_cast<std::size_t>(2 * i)] = term;
        term = -term / ((2 * i + 1) * (2 * i + 2));
    }
    return RationalPoly(std::move(c));
}

RationalPoly sin_partial_poly(int n) {
    if (n < 0) throw std::invalid_argument("sin partial sum order must be >= 0");
    if (n == 0) return {};
    std::vector<Rational> c(static_cast<std::size_t>(2 * n));
    Rational term = 1;
    for (int i = 0; i < n; ++i) {
        c[static_cast<std::size_t>(2 * i + 1)] = term;
        term = -term / ((2 * i + 2) * (2 * i + 3));
    }
    return RationalPoly(std::move(c));
}

double TrigPolyExpr::evaluate(double phi, double t) const {
    return p.evaluate(t) * std::sin(phi + t) + q.evaluate(t) * std::cos(phi + t);
}

namespace {

std::string frame_term(const RationalPoly& poly, const char* frame, bool leading) {
    if (poly.is_zero()) return "";
    std::ostringstream out;
    // Render each monomial as its own term against the frame factor.
    for (int i = 0; i <= poly.degree(); ++i) {
        const Rational c = poly.coeff(i);
        if (c == 0) continue;
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (leading && out.str().empty()) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) out << "(" << mag << ")*";
        if (i == 1) out << "t*";
        if (i > 1) out << "t^" << i << "*";
        out << frame;
    }
    return out.str();
}

} // namespace

std::string TrigPolyExpr::to_string() const {
    if (p.is_zero() && q.is_zero()) return "0";
    std::string s = frame_term(p, "sin(phi+t)", true);
    s += frame_term(q, "cos(phi+t)", s.empty());
    return s;
}

TrigPolyExpr differentiate(const TrigPolyExpr& e) {
    return {e.p.derivative() - e.q, e.p + e.q.derivative()};
}

Point2 TrigPolyCurve::evaluate(double phi, double t) const {
    return {x.evaluate(phi, t), y.evaluate(phi, t)};
}

namespace {

std::optional<SpeedMonomial> as_monomial(const RationalPoly& poly) {
    if (poly.is_zero()) return std::nullopt;
    const int d = poly.degree();
    for (int i = 0; i < d; ++i)
        if (poly.coeff(i) != 0) return std::nullopt;
    return SpeedMonomial{d, poly.coeff(d)};
}

struct TangentForm {
    SpeedMonomial x;        // monomial of x'
    SpeedMonomial y;        // monomial of y'
    bool sin_leading;       // true: x' ~ sin frame, y' ~ cos frame
};

TangentForm tangent_form(const TrigPolyCurve& curve) {
    const TrigPolyExpr dx = differentiate(curve.x);
    const TrigPolyExpr dy = differentiate(curve.y);
    auto fail = [&](const char* what) -> TangentForm {
        std::ostringstream msg;
        msg << "derivative does not collapse to a common monomial (" << what
            << "): x' = " << dx.to_string() << ", y' = " << dy.to_string();
        throw NotInClosureError(msg.str());
    };
    std::optional<SpeedMonomial> mx, my;
    bool sin_leading;
    if (dx.q.is_zero() && dy.p.is_zero() && !dx.p.is_zero()) {
        mx = as_monomial(dx.p);
        my = as_monomial(dy.q);
        sin_leading = true;
    } else if (dx.p.is_zero() && dy.q.is_zero() && !dx.q.is_zero()) {
        mx = as_monomial(dx.q);
        my = as_monomial(dy.p);
        sin_leading = false;
    } else {
        return fail("mixed frame components");
    }
    if (!mx || !my) return fail("non-monomial coefficient");
    if (mx->degree != my->degree) return fail("degree mismatch");
    const Rational ax = mx->coeff < 0 ? Rational(-mx->coeff) : mx->coeff;
    const Rational ay = my->coeff < 0 ? Rational(-my->coeff) : my->coeff;
    if (ax != ay) return fail("magnitude mismatch");
    return {*mx, *my, sin_leading};
}

} // namespace

SpeedMonomial monomial_speed(const TrigPolyCurve& curve) {
    return tangent_form(curve).x;
}

TrigPolyCurve symbolic_involute(const TrigPolyCurve& curve) {
    const TangentForm form = tangent_form(curve);
    const int d = form.x.degree;
    // s(t) = |c| t^{d+1}/(d+1); combined with the tangent sign this
    // subtracts (c/(d+1)) t^{d+1} times the frame factor of each coordinate.
    const Rational fx = form.x.coeff / (d + 1);
    const Rational fy = form.y.coeff / (d + 1);
    const RationalPoly mx = RationalPoly::monomial(fx, d + 1);
    const RationalPoly my = RationalPoly::monomial(fy, d + 1);
    TrigPolyCurve out = curve;
    if (form.sin_leading) {
        out.x.p = out.x.p - mx;
        out.y.q = out.y.q - my;
    } else {
        out.x.q = out.x.q - mx;
        out.y.p = out.y.p - my;
    }
    return out;
}

TrigPolyCurve tower_curve(int k) {
    if (k < 0) throw std::invalid_argument("tower level must be >= 0");
    if (k == 0) {
        return {{RationalPoly::monomial(1, 0), {}},
                {{}, RationalPoly::monomial(1, 0)}};
    }
    const int n = (k % 2 == 1) ? (k + 1) / 2 : k / 2;
    const RationalPoly c = cos_partial_poly(k % 2 == 1 ? n - 1 : n);
    const RationalPoly s = sin_partial_poly(n);
    return {{c, -s}, {s, c}};
}

namespace {

std::vector<std::string> coefficient_diffs(const TrigPolyCurve& got,
                                           const TrigPolyCurve& want) {
    std::vector<std::string> diffs;
    auto compare = [&](const char* name, const RationalPoly& a, const RationalPoly& b) {
        const int d = std::max(a.degree(), b.degree());
        for (int i = 0; i <= d; ++i) {
            if (a.coeff(i) != b.coeff(i)) {
                std::ostringstream msg;
                msg << name << " t^" << i << ": computed " << a.coeff(i)
                    << ", expected " << b.coeff(i);
                diffs.push_back(msg.str());
            }
        }
    };
    compare("x.p", got.x.p, want.x.p);
    compare("x.q", got.x.q, want.x.q);
    compare("y.p", got.y.p, want.y.p);
    compare("y.q", got.y.q, want.y.q);
    return diffs;
}

} // namespace

ProofReport verify_induction(int max_k) {
    if (max_k < 1) throw std::invalid_argument("verify_induction needs max_k >= 1");
    ProofReport report;
    report.max_k = max_k;
    report.pass = true;
    for (int k = 1; k <= max_k; ++k) {
        InductionStep step;
        step.from = k;
        step.to = k + 1;
        const TrigPolyCurve level = tower_curve(k);
        const SpeedMonomial sp = monomial_speed(level);
        step.arc_degree = sp.degree + 1;
        step.arc_coeff = (sp.coeff < 0 ? Rational(-sp.coeff) : sp.coeff) / (sp.degree + 1);
        step.computed = symbolic_involute(level);
        step.diffs = coefficient_diffs(step.computed, tower_curve(k + 1));
        step.pass = step.diffs.empty();
        report.pass = report.pass && step.pass;
        report.steps.push_back(std::move(step));
    }
    return report;
}

std::string ProofReport::to_text() const {
    std::ostringstream out;
    out << "involute closure check, levels 1.." << max_k << "\n";
    for (const InductionStep& s : steps) {
        out << "\nlevel " << s.from << " -> " << s.to << ": "
            << (s.pass ? "pass" : "FAIL") << "\n";
        out << "  s(t) = ";
        if (s.arc_coeff != 1) out << "(" << s.arc_coeff << ")*";
        out << "t^" << s.arc_degree << "\n";
        out << "  x(t) = " << s.computed.x.to_string() << "\n";
        out << "  y(t) = " << s.computed.y.to_string() << "\n";
        for (const std::string& d : s.diffs) out << "  mismatch: " << d << "\n";
    }
    out << "\noverall: " << (pass ? "pass" : "FAIL") << "\n";
    return out.str();
}

std::string ProofReport::to_json() const {
    nlohmann::json j;
    j["max_k"] = max_k;
    j["pass"] = pass;
    j["steps"] = nlohmann::json::array();
    for (const InductionStep& s : steps) {
        nlohmann::json js;
        js["from"] = s.from;
        js["to"] = s.to;
        js["pass"] = s.pass;
        std::ostringstream coeff;
        coeff << s.arc_coeff;
        js["arc_length_monomial"] = {{"degree", s.arc_degree},
                                     {"coefficient", coeff.str()}};
        js["x"] = s.computed.x.to_string();
        js["y"] = s.computed.y.to_string();
        js["diffs"] = s.diffs;
        j["steps"].push_back(std::move(js));
    }
    return j.dump(2);
}

} // namespace involute::symbolic
