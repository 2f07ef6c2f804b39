#include "bcnfoc/oracle.hpp"

#include <limits>
#include <set>

#include "bcnfoc/errors.hpp"

// Uses no graph or solver code; constraints are read from the raw
// ProblemSpec fields.

namespace bcnfoc {

namespace {

const std::set<InputIndex>& inputs_at(const Constraints& c, StateIndex i) {
  const auto it = c.per_state_inputs.find(i);
  return it == c.per_state_inputs.end() ? c.default_allowed_inputs : it->second;
}

bool forbidden(const Constraints& c, StateIndex i) { return c.forbidden_states.contains(i); }

std::uint64_t saturating_pow_sum(std::uint64_t base, std::uint64_t terms, bool sum) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t power = 1;
  std::uint64_t total = sum ? 0 : 1;
  for (std::uint64_t e = 0; e < terms; ++e) {
    if (sum) {
      total = total > kMax - power ? kMax : total + power;
    }
    power = base != 0 && power > kMax / base ? kMax : power * base;
    if (!sum) total = power;
  }
  return total;
}

/// Size of the reachable set, computed by plain set iteration.
std::size_t reachable_count(const NetworkModel& model, const ProblemSpec& spec) {
  const Constraints& c = spec.constraints;
  std::set<StateIndex> reached{spec.x0};
  std::set<StateIndex> frontier{spec.x0};
  while (!frontier.empty()) {
    std::set<StateIndex> next;
    for (StateIndex i : frontier) {
      for (InputIndex k : inputs_at(c, i)) {
        const StateIndex j = model.step(i, k);
        if (!forbidden(c, j) && reached.insert(j).second) next.insert(j);
      }
    }
    frontier = std::move(next);
  }
  return reached.size();
}

/// Preorder walk over admissible control sequences of length <= max_depth, in
/// lexicographic order. `visit(depth, state, cost, controls, states)` runs at
/// every node; `cost` is the accumulated stage cost.
template <typename Visit>
void walk(const NetworkModel& model, const ProblemSpec& spec, std::size_t max_depth, Visit&& visit) {
  const Constraints& c = spec.constraints;
  if (forbidden(c, spec.x0)) return;

  struct Frame {
    StateIndex state;
    double cost;
    std::vector<InputIndex> choices;
    std::size_t next = 0;
  };
  std::vector<InputIndex> controls;
  std::vector<StateIndex> states{spec.x0};
  std::vector<Frame> stack;

  auto enter = [&](StateIndex state, double cost) {
    const std::size_t depth = stack.size();
    visit(depth, state, cost, controls, states);
    Frame f{state, cost, {}, 0};
    if (depth < max_depth) {
      const auto& allowed = inputs_at(c, state);
      f.choices.assign(allowed.begin(), allowed.end());
    }
    stack.push_back(std::move(f));
  };

  enter(spec.x0, 0.0);
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.choices.size()) {
      stack.pop_back();
      if (!controls.empty()) {
        controls.pop_back();
        states.pop_back();
      }
      continue;
    }
    const InputIndex k = top.choices[top.next++];
    const StateIndex j = model.step(top.state, k);
    if (forbidden(c, j)) continue;
    const auto t = static_cast<std::int64_t>(stack.size() - 1);
    const double cost = top.cost + spec.stage_cost.evaluate(top.state, k, t);
    controls.push_back(k);
    states.push_back(j);
    enter(j, cost);
  }
}

void offer(OracleResult& result, double value, const std::vector<InputIndex>& controls,
           const std::vector<StateIndex>& states) {
  if (!result.optimal_value || value < *result.optimal_value) {
    result.optimal_value = value;
    result.witness = controls;
    result.witness_trajectory = states;
    result.optimum_count = 1;
  } else if (value == *result.optimal_value) {
    ++result.optimum_count;
  }
}

std::uint64_t limit_from(std::uint64_t size, std::uint64_t limit) {
  if (size > limit) {
    throw Error(ErrorKind::too_large, "enumeration of " + std::to_string(size) + " sequences exceeds the limit of " +
                                          std::to_string(limit));
  }
  return size;
}

}  // namespace

std::uint64_t enumeration_size(const NetworkModel& model, const ProblemSpec& spec) {
  const std::uint64_t m = model.input_count();
  if (spec.kind == ProblemKind::fixed_time) return saturating_pow_sum(m, spec.horizon, false);
  return saturating_pow_sum(m, reachable_count(model, spec), true);
}

OracleResult brute_force_fixed_time(const NetworkModel& model, const ProblemSpec& spec, std::uint64_t limit) {
  ProblemSpec s = spec;
  s.kind = ProblemKind::fixed_time;
  limit_from(enumeration_size(model, s), limit);
  OracleResult result;
  const auto horizon = static_cast<std::int64_t>(spec.horizon);
  walk(model, spec, spec.horizon,
       [&](std::size_t depth, StateIndex state, double cost, const auto& controls, const auto& states) {
         if (depth != spec.horizon || !spec.omega.contains(state)) return;
         offer(result, cost + spec.terminal_cost.evaluate(state, 1, horizon), controls, states);
       });
  return result;
}

OracleResult brute_force_fixed_dest(const NetworkModel& model, const ProblemSpec& spec, std::uint64_t limit) {
  ProblemSpec s = spec;
  s.kind = ProblemKind::fixed_destination;
  limit_from(enumeration_size(model, s), limit);
  OracleResult result;
  if (forbidden(spec.constraints, spec.x0)) return result;
  const std::size_t z = reachable_count(model, spec);
  walk(model, spec, z - 1,
       [&](std::size_t depth, StateIndex state, double cost, const auto& controls, const auto& states) {
         if (!spec.omega.contains(state)) return;
         offer(result, cost + spec.terminal_cost.evaluate(state, 1, static_cast<std::int64_t>(depth)), controls,
               states);
       });
  return result;
}

std::optional<double> evaluate_controls(const NetworkModel& model, const ProblemSpec& spec,
                                        std::span<const InputIndex> controls) {
  const Constraints& c = spec.constraints;
  if (spec.kind == ProblemKind::fixed_time && controls.size() != spec.horizon) return std::nullopt;
  StateIndex state = spec.x0;
  if (forbidden(c, state)) return std::nullopt;
  double cost = 0.0;
  for (std::size_t t = 0; t < controls.size(); ++t) {
    const InputIndex k = controls[t];
    if (k < 1 || k > model.input_count() || !inputs_at(c, state).contains(k)) return std::nullopt;
    cost += spec.stage_cost.evaluate(state, k, static_cast<std::int64_t>(t));
    state = model.step(state, k);
    if (forbidden(c, state)) return std::nullopt;
  }
  if (!spec.omega.contains(state)) return std::nullopt;
  return cost + spec.terminal_cost.evaluate(state, 1, static_cast<std::int64_t>(controls.size()));
}

}  // namespace bcnfoc
