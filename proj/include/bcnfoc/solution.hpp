#pragma once

#include <cstddef>
#include <vector>

#include "bcnfoc/layered_graph.hpp"
#include "bcnfoc/types.hpp"

namespace bcnfoc {

struct SolveStats {
  std::size_t reachable_states = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  double solve_seconds = 0.0;
};

struct Solution {
  double optimal_value = 0.0;
  std::vector<InputIndex> controls;
  /// trajectory[0] = x0, trajectory.size() = controls.size() + 1.
  std::vector<StateIndex> trajectory;
  /// Vertex path in the solver graph, ending at the pseudo-state.
  std::vector<VertexId> path;
  SolveStats stats;
};

}  // namespace bcnfoc
