#pragma once

#include <optional>
#include <vector>

#include "bcnfoc/layered_graph.hpp"
#include "bcnfoc/model.hpp"
#include "bcnfoc/solution.hpp"

namespace bcnfoc {

/// Omega ∩ R(x0) != ∅.
bool check_feasibility_fixed_dest(const NetworkModel& model, const ProblemSpec& spec);

struct DestinationGraph {
  LayeredGraph graph;
  /// B_h subtracted from every terminal edge; added back to J*.
  double terminal_offset = 0.0;
  std::size_t reachable_states = 0;
};

/// STG plus pseudo-state, all weights evaluated at t = 0. Throws
/// Error(time_variant_cost) when g or h change over t = 0..|R(x0)| - 1 on
/// reachable states.
DestinationGraph build_stg_plus(const NetworkModel& model, const ProblemSpec& spec);

/// Time-expanded fixed-destination STG with Z = |R(x0)| stage layers and
/// terminal edges from every (i in Omega, t) to one timeless pseudo-state.
DestinationGraph build_ted_stg(const NetworkModel& model, const ProblemSpec& spec);

struct DijkstraRun {
  std::vector<double> distance;
  std::vector<std::optional<ArcRef>> parent;
  std::vector<bool> settled;
};

/// Binary-heap Dijkstra from vertex 0 with lazy re-insertion. Equal keys are
/// extracted in (time, state) order, the pseudo-state first. With
/// `stop_at_pseudo` the search ends when the pseudo-state is extracted.
DijkstraRun dijkstra(const LayeredGraph& graph, bool stop_at_pseudo = true);

/// Shortest path from the source to the pseudo-state, J* = d(pseudo) + offset.
/// Throws Error(infeasible) when the pseudo-state is unreachable.
Solution dijkstra_to_pseudo(const LayeredGraph& graph, double terminal_offset = 0.0);

enum class DestinationRoute { automatic, stg_plus, ted_stg };

/// Checks the cost conditions (nonnegative, nondecreasing in t; errors abort
/// with Error(assumption_violated)), then routes time-invariant costs through the
/// STG+ and time-variant ones through the TED-STG unless `route` forces one.
Solution solve_fixed_dest(const NetworkModel& model, const ProblemSpec& spec,
                          DestinationRoute route = DestinationRoute::automatic);

/// Solves one fixed-time problem per horizon T in [0, |R(x0)| - 1] with
/// h_T(x) = h(x, T) and keeps the cheapest (shortest on ties).
Solution horizon_sweep_fixed_dest(const NetworkModel& model, const ProblemSpec& spec);

}  // namespace bcnfoc
