#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "bcnfoc/model.hpp"
#include "bcnfoc/types.hpp"

namespace bcnfoc {

bool state_allowed(const Constraints& constraints, StateIndex state);

/// C_u(state) in ascending order.
std::vector<InputIndex> allowed_inputs(const Constraints& constraints, StateIndex state);

/// R_1(i): successors under C_u(i), intersected with C_x, in order of first
/// appearance for ascending control index. Throws Error(forbidden_source).
std::vector<StateIndex> one_step_reachable(const NetworkModel& model, StateIndex i,
                                           const Constraints& constraints);

/// U^ij = { k in C_u(i) : step(i, k) = j }, ascending.
std::vector<InputIndex> admissible_controls(const NetworkModel& model, StateIndex i, StateIndex j,
                                            const Constraints& constraints);

struct StgEdge {
  StateIndex target;
  std::vector<InputIndex> controls;  // U^ij, never empty
};

/// State transition graph restricted to R(x0). Parallel transitions are
/// collapsed into one edge carrying U^ij.
class Stg {
 public:
  StateIndex x0() const noexcept { return x0_; }
  /// R(x0) in BFS discovery order.
  const std::vector<StateIndex>& vertices() const noexcept { return vertices_; }
  std::span<const StgEdge> successors(StateIndex i) const;
  bool contains(StateIndex i) const { return adjacency_.contains(i); }
  std::size_t edge_count() const noexcept { return edge_count_; }

 private:
  friend Stg build_stg(const NetworkModel&, StateIndex, const Constraints&);

  StateIndex x0_ = 0;
  std::vector<StateIndex> vertices_;
  std::unordered_map<StateIndex, std::vector<StgEdge>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// BFS from x0 (FIFO, successors by ascending control index).
Stg build_stg(const NetworkModel& model, StateIndex x0, const Constraints& constraints);

struct ReachLayers {
  /// layers[d] = R_d(x0).
  std::vector<std::vector<StateIndex>> layers;
};

ReachLayers reach_layers(const NetworkModel& model, StateIndex x0, const Constraints& constraints,
                         std::size_t depth);

}  // namespace bcnfoc
