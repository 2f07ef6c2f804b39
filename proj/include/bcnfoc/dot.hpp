#pragma once

#include <set>
#include <string>
#include <vector>

#include "bcnfoc/graph.hpp"
#include "bcnfoc/layered_graph.hpp"

namespace bcnfoc {

struct DotOptions {
  std::string name = "G";
  /// States drawn as terminal (gray).
  std::set<StateIndex> terminal_states;
  /// Label STG edges with their control sets.
  bool show_controls = false;
  /// Consecutive states of a trajectory to highlight in an STG.
  std::vector<StateIndex> highlight_states;
  /// Vertex path to highlight in a layered graph.
  std::vector<VertexId> highlight_path;
};

std::string export_dot(const Stg& graph, const DotOptions& options = {});

/// Edges carry `(k, w)` labels; stage layers share a rank.
std::string export_dot(const LayeredGraph& graph, const DotOptions& options = {});

}  // namespace bcnfoc
