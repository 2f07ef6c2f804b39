#include "bcnfoc/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "bcnfoc/errors.hpp"

namespace bcnfoc {

bool state_allowed(const Constraints& constraints, StateIndex state) {
  return !constraints.forbidden_states.contains(state);
}

std::vector<InputIndex> allowed_inputs(const Constraints& constraints, StateIndex state) {
  const auto it = constraints.per_state_inputs.find(state);
  const auto& set = it != constraints.per_state_inputs.end() ? it->second : constraints.default_allowed_inputs;
  return {set.begin(), set.end()};
}

std::vector<StateIndex> one_step_reachable(const NetworkModel& model, StateIndex i, const Constraints& constraints) {
  if (!state_allowed(constraints, i)) {
    throw Error(ErrorKind::forbidden_source, "s" + std::to_string(i) + " is a forbidden state");
  }
  std::vector<StateIndex> out;
  for (InputIndex k : allowed_inputs(constraints, i)) {
    const StateIndex j = model.step(i, k);
    if (state_allowed(constraints, j) && std::find(out.begin(), out.end(), j) == out.end()) out.push_back(j);
  }
  return out;
}

std::vector<InputIndex> admissible_controls(const NetworkModel& model, StateIndex i, StateIndex j,
                                            const Constraints& constraints) {
  std::vector<InputIndex> out;
  for (InputIndex k : allowed_inputs(constraints, i)) {
    if (model.step(i, k) == j) out.push_back(k);
  }
  return out;
}

std::span<const StgEdge> Stg::successors(StateIndex i) const {
  const auto it = adjacency_.find(i);
  if (it == adjacency_.end()) return {};
  return it->second;
}

Stg build_stg(const NetworkModel& model, StateIndex x0, const Constraints& constraints) {
  if (!state_allowed(constraints, x0)) {
    throw Error(ErrorKind::forbidden_source, "x0 = s" + std::to_string(x0) + " is a forbidden state");
  }
  Stg g;
  g.x0_ = x0;
  std::deque<StateIndex> queue{x0};
  g.vertices_.push_back(x0);
  g.adjacency_[x0];
  while (!queue.empty()) {
    const StateIndex i = queue.front();
    queue.pop_front();
    std::vector<StgEdge> edges;
    for (InputIndex k : allowed_inputs(constraints, i)) {
      const StateIndex j = model.step(i, k);
      if (!state_allowed(constraints, j)) continue;
      auto e = std::find_if(edges.begin(), edges.end(), [j](const StgEdge& x) { return x.target == j; });
      if (e == edges.end()) {
        edges.push_back({j, {k}});
      } else {
        e->controls.push_back(k);
      }
      if (!g.adjacency_.contains(j)) {
        g.adjacency_[j];
        g.vertices_.push_back(j);
        queue.push_back(j);
      }
    }
    g.edge_count_ += edges.size();
    g.adjacency_[i] = std::move(edges);
  }
  return g;
}

ReachLayers reach_layers(const NetworkModel& model, StateIndex x0, const Constraints& constraints,
                         std::size_t depth) {
  if (!state_allowed(constraints, x0)) {
    throw Error(ErrorKind::forbidden_source, "x0 = s" + std::to_string(x0) + " is a forbidden state");
  }
  ReachLayers r;
  r.layers.push_back({x0});
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<StateIndex> next;
    std::unordered_set<StateIndex> seen;
    for (StateIndex i : r.layers.back()) {
      for (StateIndex j : one_step_reachable(model, i, constraints)) {
        if (seen.insert(j).second) next.push_back(j);
      }
    }
    r.layers.push_back(std::move(next));
  }
  return r;
}

}  // namespace bcnfoc
