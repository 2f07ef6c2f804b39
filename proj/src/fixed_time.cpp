#include "bcnfoc/fixed_time.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "bcnfoc/errors.hpp"
#include "bcnfoc/graph.hpp"

namespace bcnfoc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Successor {
  StateIndex target;
  std::vector<InputIndex> controls;
};

/// Successors of i grouped by target, in order of first appearance.
std::vector<Successor> grouped_successors(const NetworkModel& model, StateIndex i, const Constraints& c) {
  std::vector<Successor> out;
  for (InputIndex k : allowed_inputs(c, i)) {
    const StateIndex j = model.step(i, k);
    if (!state_allowed(c, j)) continue;
    auto it = std::find_if(out.begin(), out.end(), [j](const Successor& s) { return s.target == j; });
    if (it == out.end()) {
      out.push_back({j, {k}});
    } else {
      it->controls.push_back(k);
    }
  }
  return out;
}

bool better(double candidate, StateIndex candidate_state, double best, std::optional<StateIndex> best_state) {
  if (candidate < best) return true;
  return candidate == best && best_state && candidate_state < *best_state;
}

}  // namespace

LayeredGraph build_tet_stg(const NetworkModel& model, const ProblemSpec& spec) {
  const Constraints& c = spec.constraints;
  if (!state_allowed(c, spec.x0)) {
    throw Error(ErrorKind::forbidden_source, "x0 = s" + std::to_string(spec.x0) + " is a forbidden state");
  }
  const auto horizon = static_cast<std::int64_t>(spec.horizon);
  LayeredGraph g(GraphKind::tet_stg);
  g.add_vertex(spec.x0, 0, 0);

  for (std::int64_t t = 0; t < horizon; ++t) {
    if (g.layers().size() <= static_cast<std::size_t>(t)) break;
    const std::vector<VertexId> layer = g.layers()[t];
    for (VertexId v : layer) {
      const StateIndex i = g.vertex(v).state;
      for (const Successor& s : grouped_successors(model, i, c)) {
        if (t + 1 == horizon && !spec.omega.contains(s.target)) continue;
        const VertexId w = g.add_vertex(s.target, t + 1, static_cast<std::size_t>(t + 1));
        const WeightedControl wc = edge_weight(spec.stage_cost, i, s.controls, t);
        g.add_arc(v, w, wc.weight, wc.control);
      }
    }
  }

  const VertexId pseudo = g.add_pseudo(horizon + 1);
  if (g.layers().size() > static_cast<std::size_t>(horizon)) {
    for (VertexId v : g.layers()[horizon]) {
      const StateIndex i = g.vertex(v).state;
      if (spec.omega.contains(i)) g.add_arc(v, pseudo, spec.terminal_cost.evaluate(i, 1, horizon), std::nullopt);
    }
  }
  return g;
}

bool check_feasibility_fixed_time(const NetworkModel& model, const ProblemSpec& spec) {
  if (!state_allowed(spec.constraints, spec.x0)) return false;
  const ReachLayers r = reach_layers(model, spec.x0, spec.constraints, spec.horizon);
  return std::any_of(r.layers.back().begin(), r.layers.back().end(),
                     [&](StateIndex i) { return spec.omega.contains(i); });
}

DpTable layer_sweep(const LayeredGraph& graph) {
  DpTable dp{std::vector<double>(graph.vertex_count(), kInf),
             std::vector<std::optional<ArcRef>>(graph.vertex_count())};
  if (graph.vertex_count() == 0) return dp;
  dp.value[0] = 0.0;

  auto relax_into = [&](VertexId v) {
    std::optional<StateIndex> best_state;
    for (const ArcRef& ref : graph.predecessors(v)) {
      const double base = dp.value[ref.source];
      if (base == kInf) continue;
      const double candidate = base + graph.arc(ref).weight;
      const StateIndex s = graph.vertex(ref.source).state;
      if (!best_state || better(candidate, s, dp.value[v], best_state)) {
        dp.value[v] = candidate;
        dp.parent[v] = ref;
        best_state = s;
      }
    }
  };

  const auto& layers = graph.layers();
  for (std::size_t t = 1; t < layers.size(); ++t) {
    for (VertexId v : layers[t]) relax_into(v);
  }
  if (graph.pseudo()) relax_into(*graph.pseudo());
  return dp;
}

DpTable memoized_recursion(const LayeredGraph& graph) {
  const std::size_t n = graph.vertex_count();
  DpTable dp{std::vector<double>(n, kInf), std::vector<std::optional<ArcRef>>(n)};
  enum class Mark : std::uint8_t { fresh, open, done };
  std::vector<Mark> mark(n, Mark::fresh);
  if (n == 0) return dp;
  dp.value[0] = 0.0;
  mark[0] = Mark::done;

  for (VertexId root = 0; root < n; ++root) {
    std::vector<VertexId> stack{root};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      if (mark[v] == Mark::done) {
        stack.pop_back();
      } else if (mark[v] == Mark::fresh) {
        mark[v] = Mark::open;
        for (const ArcRef& ref : graph.predecessors(v)) {
          if (mark[ref.source] == Mark::fresh) stack.push_back(ref.source);
        }
      } else {
        std::optional<StateIndex> best_state;
        for (const ArcRef& ref : graph.predecessors(v)) {
          const double base = dp.value[ref.source];
          if (base == kInf) continue;
          const double candidate = base + graph.arc(ref).weight;
          const StateIndex s = graph.vertex(ref.source).state;
          if (!best_state || better(candidate, s, dp.value[v], best_state)) {
            dp.value[v] = candidate;
            dp.parent[v] = ref;
            best_state = s;
          }
        }
        mark[v] = Mark::done;
        stack.pop_back();
      }
    }
  }
  return dp;
}

Solution extract_solution(const LayeredGraph& graph, const DpTable& table) {
  if (!graph.pseudo() || table.value[*graph.pseudo()] == kInf) {
    throw Error(ErrorKind::infeasible, "no admissible trajectory reaches the target set");
  }
  Solution sol;
  sol.optimal_value = table.value[*graph.pseudo()];
  std::vector<VertexId> path{*graph.pseudo()};
  while (table.parent[path.back()]) path.push_back(table.parent[path.back()]->source);
  std::reverse(path.begin(), path.end());
  for (std::size_t i = 0; i < path.size(); ++i) {
    const GraphVertex& v = graph.vertex(path[i]);
    if (v.state != kPseudoState) sol.trajectory.push_back(v.state);
    if (i > 0) {
      const auto& ref = *table.parent[path[i]];
      if (const auto& k = graph.arc(ref).control) sol.controls.push_back(*k);
    }
  }
  sol.path = std::move(path);
  sol.stats.vertices = graph.vertex_count();
  sol.stats.edges = graph.arc_count();
  return sol;
}

Solution solve_fixed_time(const NetworkModel& model, const ProblemSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  const LayeredGraph g = build_tet_stg(model, spec);
  Solution sol = extract_solution(g, layer_sweep(g));
  sol.stats.reachable_states = build_stg(model, spec.x0, spec.constraints).vertices().size();
  sol.stats.solve_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

}  // namespace bcnfoc
