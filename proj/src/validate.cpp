#include "bcnfoc/validate.hpp"

#include "bcnfoc/fixed_destination.hpp"
#include "bcnfoc/fixed_time.hpp"
#include "bcnfoc/graph.hpp"

namespace bcnfoc {

std::vector<Diagnostic> validate(const NetworkModel& model, const ProblemSpec& spec) {
  std::vector<Diagnostic> out;
  const Constraints& c = spec.constraints;

  for (StateIndex s : c.forbidden_states) {
    out.push_back({Severity::warning, "forbidden-state",
                   "state s" + std::to_string(s) + " is excluded by the state constraint"});
  }
  for (StateIndex s : spec.omega) {
    if (c.forbidden_states.contains(s)) {
      out.push_back({Severity::warning, "forbidden-target",
                     "target s" + std::to_string(s) + " is forbidden and can never be reached"});
    }
  }
  if (c.forbidden_states.contains(spec.x0)) {
    out.push_back({Severity::error, "forbidden-source", "x0 = s" + std::to_string(spec.x0) + " is forbidden"});
    return out;
  }

  const Stg stg = build_stg(model, spec.x0, c);
  std::string dead_ends;
  std::size_t dead_count = 0;
  for (StateIndex s : stg.vertices()) {
    if (stg.successors(s).empty()) {
      if (dead_count++ < 8) dead_ends += " s" + std::to_string(s);
    }
  }
  if (dead_count > 0) {
    out.push_back({Severity::warning, "dead-end",
                   std::to_string(dead_count) + " reachable state(s) without admissible successors:" + dead_ends +
                       (dead_count > 8 ? " ..." : "")});
  }

  std::int64_t t_max = 0;
  if (spec.kind == ProblemKind::fixed_time) {
    t_max = static_cast<std::int64_t>(spec.horizon);
    if (!check_feasibility_fixed_time(model, spec)) {
      out.push_back({Severity::error, "infeasible",
                     "no target state is reachable in exactly " + std::to_string(spec.horizon) + " steps"});
    }
  } else {
    t_max = static_cast<std::int64_t>(stg.vertices().size()) - 1;
    if (!check_feasibility_fixed_dest(model, spec)) {
      out.push_back({Severity::error, "infeasible", "no target state is reachable from x0"});
    }
  }

  const std::vector<StateIndex> omega(spec.omega.begin(), spec.omega.end());
  auto report = check_assumptions(spec.stage_cost, spec.terminal_cost, spec.kind, omega, t_max);
  for (auto& d : report.diagnostics) out.push_back(std::move(d));
  return out;
}

}  // namespace bcnfoc
