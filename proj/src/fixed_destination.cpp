#include "bcnfoc/fixed_destination.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <queue>
#include <tuple>

#include "bcnfoc/errors.hpp"
#include "bcnfoc/graph.hpp"
#include "bcnfoc/fixed_time.hpp"

namespace bcnfoc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<StateIndex> reachable_targets(const Stg& stg, const std::set<StateIndex>& omega) {
  std::vector<StateIndex> out;
  for (StateIndex i : omega) {
    if (stg.contains(i)) out.push_back(i);
  }
  return out;
}

Stg checked_stg(const NetworkModel& model, const ProblemSpec& spec) {
  if (!state_allowed(spec.constraints, spec.x0)) {
    throw Error(ErrorKind::forbidden_source, "x0 = s" + std::to_string(spec.x0) + " is a forbidden state");
  }
  return build_stg(model, spec.x0, spec.constraints);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

bool check_feasibility_fixed_dest(const NetworkModel& model, const ProblemSpec& spec) {
  if (!state_allowed(spec.constraints, spec.x0)) return false;
  const Stg stg = build_stg(model, spec.x0, spec.constraints);
  return !reachable_targets(stg, spec.omega).empty();
}

DestinationGraph build_stg_plus(const NetworkModel& model, const ProblemSpec& spec) {
  const Stg stg = checked_stg(model, spec);
  const std::vector<StateIndex> omega(spec.omega.begin(), spec.omega.end());
  const auto t_max = static_cast<std::int64_t>(stg.vertices().size()) - 1;
  if (!is_time_invariant(spec.stage_cost, spec.terminal_cost, stg.vertices(), omega, t_max)) {
    throw Error(ErrorKind::time_variant_cost, "costs depend on time; use the time-expanded graph");
  }
  const std::vector<StateIndex> targets = reachable_targets(stg, spec.omega);
  const ShiftedTerminal shift = terminal_shift(spec.terminal_cost, targets, 0);

  DestinationGraph out{LayeredGraph(GraphKind::stg_plus), shift.offset, stg.vertices().size()};
  LayeredGraph& g = out.graph;
  for (StateIndex i : stg.vertices()) g.add_vertex(i, 0, 0);
  for (StateIndex i : stg.vertices()) {
    const VertexId v = *g.find(i, 0);
    for (const StgEdge& e : stg.successors(i)) {
      const WeightedControl wc = edge_weight(spec.stage_cost, i, e.controls, 0);
      g.add_arc(v, *g.find(e.target, 0), wc.weight, wc.control);
    }
  }
  const VertexId pseudo = g.add_pseudo(kTimeless);
  for (StateIndex i : targets) g.add_arc(*g.find(i, 0), pseudo, shift.cost.evaluate(i, 1, 0), std::nullopt);
  return out;
}

DestinationGraph build_ted_stg(const NetworkModel& model, const ProblemSpec& spec) {
  const Stg stg = checked_stg(model, spec);
  const auto z = static_cast<std::int64_t>(stg.vertices().size());
  const std::vector<StateIndex> targets = reachable_targets(stg, spec.omega);
  const ShiftedTerminal shift = terminal_shift(spec.terminal_cost, targets, z - 1);

  DestinationGraph out{LayeredGraph(GraphKind::ted_stg), shift.offset, stg.vertices().size()};
  LayeredGraph& g = out.graph;
  g.add_vertex(spec.x0, 0, 0);
  for (std::int64_t t = 0; t + 1 < z; ++t) {
    if (g.layers().size() <= static_cast<std::size_t>(t)) break;
    const std::vector<VertexId> layer = g.layers()[t];
    for (VertexId v : layer) {
      const StateIndex i = g.vertex(v).state;
      for (const StgEdge& e : stg.successors(i)) {
        const VertexId w = g.add_vertex(e.target, t + 1, static_cast<std::size_t>(t + 1));
        const WeightedControl wc = edge_weight(spec.stage_cost, i, e.controls, t);
        g.add_arc(v, w, wc.weight, wc.control);
      }
    }
  }
  const VertexId pseudo = g.add_pseudo(kTimeless);
  for (std::size_t t = 0; t < g.layers().size(); ++t) {
    for (VertexId v : g.layers()[t]) {
      const StateIndex i = g.vertex(v).state;
      if (spec.omega.contains(i)) {
        g.add_arc(v, pseudo, shift.cost.evaluate(i, 1, static_cast<std::int64_t>(t)), std::nullopt);
      }
    }
  }
  return out;
}

DijkstraRun dijkstra(const LayeredGraph& graph, bool stop_at_pseudo) {
  const std::size_t n = graph.vertex_count();
  DijkstraRun run{std::vector<double>(n, kInf), std::vector<std::optional<ArcRef>>(n), std::vector<bool>(n, false)};
  if (n == 0) return run;

  using Entry = std::tuple<double, std::int64_t, StateIndex, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  auto push = [&](VertexId v) {
    const GraphVertex& gv = graph.vertex(v);
    heap.emplace(run.distance[v], gv.time, gv.state, v);
  };
  run.distance[0] = 0.0;
  push(0);
  while (!heap.empty()) {
    const auto [d, time, state, u] = heap.top();
    heap.pop();
    if (run.settled[u] || d > run.distance[u]) continue;
    run.settled[u] = true;
    if (stop_at_pseudo && graph.pseudo() && u == *graph.pseudo()) break;
    const auto arcs = graph.arcs(u);
    for (std::uint32_t a = 0; a < arcs.size(); ++a) {
      const VertexId v = arcs[a].target;
      if (run.settled[v]) continue;
      const double candidate = d + arcs[a].weight;
      if (candidate < run.distance[v]) {
        run.distance[v] = candidate;
        run.parent[v] = ArcRef{u, a};
        push(v);
      }
    }
  }
  return run;
}

Solution dijkstra_to_pseudo(const LayeredGraph& graph, double terminal_offset) {
  const DijkstraRun run = dijkstra(graph, true);
  if (!graph.pseudo() || !run.settled[*graph.pseudo()]) {
    throw Error(ErrorKind::infeasible, "no admissible trajectory reaches the target set");
  }
  Solution sol = extract_solution(graph, DpTable{run.distance, run.parent});
  sol.optimal_value = run.distance[*graph.pseudo()] + terminal_offset;
  return sol;
}

Solution solve_fixed_dest(const NetworkModel& model, const ProblemSpec& spec, DestinationRoute route) {
  const auto start = std::chrono::steady_clock::now();
  const Stg stg = checked_stg(model, spec);
  if (reachable_targets(stg, spec.omega).empty()) {
    throw Error(ErrorKind::infeasible, "no target state is reachable from x0");
  }
  const auto z = static_cast<std::int64_t>(stg.vertices().size());
  const std::vector<StateIndex> omega(spec.omega.begin(), spec.omega.end());

  const AssumptionReport report =
      check_assumptions(spec.stage_cost, spec.terminal_cost, ProblemKind::fixed_destination, omega, z - 1);
  if (has_errors(report.diagnostics)) {
    std::string message;
    for (const auto& d : report.diagnostics) {
      if (d.severity != Severity::error) continue;
      if (!message.empty()) message += "; ";
      message += d.message;
    }
    throw Error(ErrorKind::assumption_violated, message);
  }

  if (route == DestinationRoute::automatic) {
    route = is_time_invariant(spec.stage_cost, spec.terminal_cost, stg.vertices(), omega, z - 1)
                ? DestinationRoute::stg_plus
                : DestinationRoute::ted_stg;
  }
  const DestinationGraph dg =
      route == DestinationRoute::stg_plus ? build_stg_plus(model, spec) : build_ted_stg(model, spec);
  Solution sol = dijkstra_to_pseudo(dg.graph, dg.terminal_offset);
  sol.stats.reachable_states = dg.reachable_states;
  sol.stats.solve_seconds = seconds_since(start);
  return sol;
}

Solution horizon_sweep_fixed_dest(const NetworkModel& model, const ProblemSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  const Stg stg = checked_stg(model, spec);
  const std::size_t z = stg.vertices().size();

  std::optional<Solution> best;
  ProblemSpec fixed = spec;
  fixed.kind = ProblemKind::fixed_time;
  for (std::size_t horizon = 0; horizon < z; ++horizon) {
    fixed.horizon = horizon;
    const LayeredGraph g = build_tet_stg(model, fixed);
    const DpTable dp = layer_sweep(g);
    if (dp.value[*g.pseudo()] == kInf) continue;
    if (!best || dp.value[*g.pseudo()] < best->optimal_value) best = extract_solution(g, dp);
  }
  if (!best) throw Error(ErrorKind::infeasible, "no target state is reachable from x0");
  best->stats.reachable_states = z;
  best->stats.solve_seconds = seconds_since(start);
  return *best;
}

}  // namespace bcnfoc
