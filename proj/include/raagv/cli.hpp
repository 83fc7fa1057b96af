#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace raagv {

/// Exit codes: 0 embeddable / success, 1 not embeddable, 2 bad input or usage.
inline constexpr int kExitEmbeddable = 0;
inline constexpr int kExitNotEmbeddable = 1;
inline constexpr int kExitInputError = 2;

/// Runs the command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raagv
