#pragma once

#include <optional>
#include <vector>

#include "bcnfoc/layered_graph.hpp"
#include "bcnfoc/model.hpp"
#include "bcnfoc/solution.hpp"

namespace bcnfoc {

/// Time-expanded fixed-time STG: layers V_0..V_T with V_t = R_t(x0) for
/// t < T and V_T = R_T(x0) ∩ Omega, then the pseudo-state at time T + 1.
/// Stage edges carry min_k g(i, k, t) and its argmin; terminal edges carry
/// h_T(i), evaluated with t = T.
LayeredGraph build_tet_stg(const NetworkModel& model, const ProblemSpec& spec);

/// Omega ∩ R_T(x0) != ∅.
bool check_feasibility_fixed_time(const NetworkModel& model, const ProblemSpec& spec);

/// Shortest-path weights F from the source and the minimizing in-arc of each
/// vertex. Unreached vertices hold +inf and no parent.
struct DpTable {
  std::vector<double> value;
  std::vector<std::optional<ArcRef>> parent;
};

/// Forward layer sweep over an acyclic layered graph. Among equal values the
/// predecessor with the smaller state index wins.
DpTable layer_sweep(const LayeredGraph& graph);

/// Top-down memoized recursion F(v) = min_{u in P(v)} F(u) + w(u, v), with
/// the same tie-break as layer_sweep.
DpTable memoized_recursion(const LayeredGraph& graph);

/// Reads the optimal path out of a DP table (throws Error(infeasible) when
/// the pseudo-state is unreached).
Solution extract_solution(const LayeredGraph& graph, const DpTable& table);

/// Throws Error(infeasible) when Omega ∩ R_T(x0) = ∅.
Solution solve_fixed_time(const NetworkModel& model, const ProblemSpec& spec);

}  // namespace bcnfoc
