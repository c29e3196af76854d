#pragma once

#include <string>

namespace involute::cli {

/// Parses "pi", "pi/INT", "INT*pi/INT", or a decimal literal.
/// Throws std::invalid_argument on anything else.
double parse_angle(const std::string& text);

/// Full command-line entry point (subcommands: tower, involute, polygon,
/// render, verify). Returns the process exit code: 0 success, 1 runtime or
/// verification failure, 2 usage error.
int run(int argc, const char* const* argv);

} // namespace involute::cli
