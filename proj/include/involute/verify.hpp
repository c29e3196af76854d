#pragma once

#include <string>
#include <vector>

namespace involute {

struct CheckRecord {
    std::string name;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::vector<CheckRecord> checks;

    bool pass() const;
    std::string to_json() const;
};

struct VerifyOptions {
    int max_depth = 6;
    std::vector<double> thetas;  // defaults to {0.3, 1.0, pi/3} when empty
    double tol = 1e-7;
};

/// Runs the full cross-check suite: symbolic induction, numeric tower vs
/// closed forms, segment lengths, and the taut-string/tangency invariants.
VerificationReport run_verification(const VerifyOptions& options = {});

} // namespace involute
