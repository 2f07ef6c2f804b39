#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bcnfoc::cli {

inline constexpr int kExitSolved = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitTooLarge = 3;
/// `verify` found a solver/oracle disagreement.
inline constexpr int kExitMismatch = 4;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcnfoc::cli
