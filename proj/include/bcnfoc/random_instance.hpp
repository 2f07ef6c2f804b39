#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "bcnfoc/model.hpp"

namespace bcnfoc {

struct RandomInstanceOptions {
  ProblemKind kind = ProblemKind::fixed_time;
  std::size_t max_state_vars = 4;
  std::size_t max_input_vars = 2;
  std::size_t max_horizon = 5;
  /// Allow cost table entries of the form a + b*t (b >= 0).
  bool time_variant = true;
  /// Regenerate until the brute-force enumeration size is at most this.
  std::uint64_t max_enumeration = 1'000'000;
};

/// Small random problem in file form; parse both texts to get the instance.
struct RandomInstance {
  std::string network_text;
  std::string problem_text;
};

/// Deterministic for a given seed and options.
RandomInstance random_instance(std::uint64_t seed, const RandomInstanceOptions& options = {});

}  // namespace bcnfoc
