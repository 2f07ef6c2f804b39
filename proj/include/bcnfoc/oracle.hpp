#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bcnfoc/model.hpp"

namespace bcnfoc {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

/// Result of exhaustive enumeration. Witness is the lexicographically
/// smallest optimal control sequence.
struct OracleResult {
  std::optional<double> optimal_value;  // empty when infeasible
  std::vector<InputIndex> witness;
  std::vector<StateIndex> witness_trajectory;
  std::uint64_t optimum_count = 0;
};

/// Enumerates Δ_M^T. Throws Error(too_large) when M^T exceeds `limit`.
OracleResult brute_force_fixed_time(const NetworkModel& model, const ProblemSpec& spec,
                                    std::uint64_t limit = kDefaultEnumerationLimit);

/// Enumerates every sequence of length K < |R(x0)|. Throws Error(too_large)
/// when the number of sequences exceeds `limit`.
OracleResult brute_force_fixed_dest(const NetworkModel& model, const ProblemSpec& spec,
                                    std::uint64_t limit = kDefaultEnumerationLimit);

/// Cost of applying `controls` from x0, or nothing if a constraint is violated
/// or the final state is outside Omega. Fixed-time specs also require
/// controls.size() == horizon.
std::optional<double> evaluate_controls(const NetworkModel& model, const ProblemSpec& spec,
                                        std::span<const InputIndex> controls);

/// Number of sequences the matching brute-force routine would enumerate
/// (saturates at UINT64_MAX).
std::uint64_t enumeration_size(const NetworkModel& model, const ProblemSpec& spec);

}  // namespace bcnfoc
