#pragma once

#include <vector>

#include "bcnfoc/diagnostics.hpp"
#include "bcnfoc/model.hpp"

namespace bcnfoc {

/// Structured warnings and errors for a model/problem pair: forbidden states,
/// unreachable targets, dead-end states and cost-assumption violations.
std::vector<Diagnostic> validate(const NetworkModel& model, const ProblemSpec& spec);

}  // namespace bcnfoc
