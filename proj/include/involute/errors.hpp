#pragma once

#include <stdexcept>
#include <string>

namespace involute {

/// The curve's speed vanishes on a whole neighborhood, so no tangent
/// direction can be recovered even as a one-sided limit.
struct DegenerateCurveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A non-finite value appeared during numerical evaluation; `where` is the
/// offending parameter value.
struct NumericError : std::runtime_error {
    double where;
    NumericError(const std::string& msg, double where_)
        : std::runtime_error(msg), where(where_) {}
};

/// Requested tower depth exceeds the configured maximum.
struct DepthLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A symbolic curve whose derivative does not collapse to the common
/// monomial form; it lies outside the class closed under the involute map.
struct NotInClosureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace involute
