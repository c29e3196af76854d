#include "involute/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "involute/involute.hpp"
#include "involute/series.hpp"
#include "involute/symbolic.hpp"

namespace involute {

bool VerificationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckRecord& c) { return c.pass; });
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["pass"] = pass();
    j["checks"] = nlohmann::json::array();
    for (const CheckRecord& c : checks) {
        j["checks"].push_back({{"name", c.name},
                               {"expected", c.expected},
                               {"actual", c.actual},
                               {"tolerance", c.tolerance},
                               {"pass", c.pass}});
    }
    return j.dump(2);
}

namespace {

void record(VerificationReport& report, const std::string& name, double expected,
            double actual, double tol) {
    report.checks.push_back(
        {name, expected, actual, tol, std::fabs(actual - expected) <= tol});
}

std::string theta_tag(double theta) {
    std::ostringstream s;
    s << "theta=" << theta;
    return s.str();
}

} // namespace

VerificationReport run_verification(const VerifyOptions& options) {
    VerificationReport report;
    std::vector<double> thetas = options.thetas;
    if (thetas.empty()) thetas = {0.3, 1.0, std::numbers::pi / 3.0};

    // Symbolic induction: exact, so expected difference is literally zero.
    const symbolic::ProofReport proof = symbolic::verify_induction(
        std::max(1, options.max_depth));
    for (const symbolic::InductionStep& step : proof.steps) {
        std::ostringstream name;
        name << "symbolic induction " << step.from << "->" << step.to;
        record(report, name.str(), 1.0, step.pass ? 1.0 : 0.0, 0.0);
    }

    for (double theta : thetas) {
        const double phi = std::numbers::pi / 2.0 - theta;
        const InvoluteTower tower = build_tower(theta, options.max_depth);

        for (int k = 1; k <= options.max_depth; ++k) {
            // Numeric endpoint vs the closed-form partial sums.
            const Point2 analytic = series::tower_endpoint(k, theta);
            record(report,
                   "endpoint A" + std::to_string(k) + " " + theta_tag(theta),
                   0.0, distance(tower.endpoints[k], analytic), options.tol);

            // Numeric segment length vs theta^k/k!.
            record(report,
                   "segment |A" + std::to_string(k - 1) + "A" +
                       std::to_string(k) + "| " + theta_tag(theta),
                   series::segment_length(k, theta), tower.segment_lengths[k - 1],
                   options.tol);

            // Curve-wide agreement with the closed form at sampled t.
            const series::ClosedFormInvolute cf = series::closed_form_involute(k, phi);
            double worst = 0.0;
            for (const auto& [t, p] : sample(tower.curves[k], 33))
                worst = std::max(worst, distance(p, cf.evaluate(t)));
            record(report,
                   "closed-form agreement AA" + std::to_string(k) + " " +
                       theta_tag(theta),
                   0.0, worst, options.tol);
        }

        // Taut-string and tangency invariants on each level.
        for (int k = 1; k <= options.max_depth; ++k) {
            const ParametricCurve& base = tower.curves[k - 1];
            const InvoluteCurve level = involute(base);
            double worst_len = 0.0;
            double worst_angle = 0.0;
            for (int i = 1; i <= 20; ++i) {
                const double t = theta * i / 20.0;
                const Point2 bp = base.position(t);
                const Point2 ip = level.curve.position(t);
                const double s = arc_length(base, t);
                worst_len = std::max(worst_len, std::fabs(distance(bp, ip) - s));
                if (s > 1e-9)
                    worst_angle = std::max(
                        worst_angle, angle_between(bp - ip, unit_tangent(base, t)));
            }
            record(report,
                   "taut string level " + std::to_string(k) + " " + theta_tag(theta),
                   0.0, worst_len, 2.0 * kDefaultArcTol);
            record(report,
                   "string tangency level " + std::to_string(k) + " " +
                       theta_tag(theta),
                   0.0, worst_angle, std::max(options.tol, 1e-6));
        }
    }
    return report;
}

} // namespace involute
