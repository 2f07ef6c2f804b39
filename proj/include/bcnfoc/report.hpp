#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "bcnfoc/model.hpp"
#include "bcnfoc/solution.hpp"

namespace bcnfoc {

/// Result of one CLI run; see docs/report_schema.md for the JSON shape.
struct RunReport {
  ProblemKind kind = ProblemKind::fixed_time;
  bool feasible = false;
  std::optional<Solution> solution;
  std::size_t reachable_states = 0;
  std::string graph;  // "tet-stg", "stg+", "ted-stg"
  std::size_t graph_vertices = 0;
  std::size_t graph_edges = 0;
  /// Only serialized when set.
  std::optional<double> solve_seconds;
};

nlohmann::ordered_json to_json(const RunReport& report, const NetworkModel& model);

}  // namespace bcnfoc
