#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mbgamma/weights.h"

namespace mbgamma::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kOk = 0, kUsage = 1, kNumerical = 2 };

/// "RE", "RE+IMi" or "RE-IMi". Throws std::invalid_argument.
std::complex<double> parse_complex(std::string_view text);

/// Comma-separated complex values; "" is the empty list.
std::vector<std::complex<double>> parse_complex_list(std::string_view text);

/// As parse_complex_list, validated as weights (positive real parts).
Weights parse_weights(std::string_view text);

/// Runs one invocation; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mbgamma::cli
