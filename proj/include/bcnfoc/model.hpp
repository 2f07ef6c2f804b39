#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bcnfoc/bool_expr.hpp"
#include "bcnfoc/cost.hpp"
#include "bcnfoc/stp.hpp"
#include "bcnfoc/types.hpp"

namespace bcnfoc {

/// A Boolean control network with its transition matrix built eagerly.
class NetworkModel {
 public:
  /// Validates names and rules and builds L. Throws Error(unknown_variable),
  /// Error(duplicate_rule) or Error(too_large).
  NetworkModel(std::vector<std::string> state_names, std::vector<std::string> input_names,
               std::vector<BoolExpr> updates);

  const std::vector<std::string>& state_names() const noexcept { return state_names_; }
  const std::vector<std::string>& input_names() const noexcept { return input_names_; }
  const std::vector<BoolExpr>& updates() const noexcept { return updates_; }
  const TransitionMatrix& transitions() const noexcept { return transitions_; }

  std::size_t state_vars() const noexcept { return state_names_.size(); }
  std::size_t input_vars() const noexcept { return input_names_.size(); }
  std::size_t state_count() const noexcept { return transitions_.state_count(); }
  std::size_t input_count() const noexcept { return transitions_.input_count(); }
  CostDims cost_dims() const noexcept { return {state_vars(), input_vars()}; }

  StateIndex step(StateIndex state, InputIndex input) const {
    return transitions_.step(state, input);
  }

 private:
  std::vector<std::string> state_names_;
  std::vector<std::string> input_names_;
  std::vector<BoolExpr> updates_;
  TransitionMatrix transitions_;
};

/// Network file:
///   inputs: u1, u2
///   states: x1, x2, x3
///   next x1 = x2 & (u1 ^ x3)
NetworkModel parse_network(std::string_view text);

/// Canonical text form; parse_network(to_text(m)) reproduces m.
std::string to_text(const NetworkModel& model);

/// State constraint C_x (as its complement) and input constraint C_u(x).
/// An entry in per_state_inputs replaces the default set for that state.
struct Constraints {
  std::set<StateIndex> forbidden_states;
  std::set<InputIndex> default_allowed_inputs;
  std::map<StateIndex, std::set<InputIndex>> per_state_inputs;

  static Constraints unconstrained(std::size_t input_count);
};

struct ProblemSpec {
  ProblemKind kind = ProblemKind::fixed_time;
  StateIndex x0 = 1;
  std::set<StateIndex> omega;
  /// Horizon T; meaningful for fixed-time problems only.
  std::size_t horizon = 0;
  Constraints constraints;
  CostSpec stage_cost;
  CostSpec terminal_cost;
};

/// Problem file: `key = value` lines (a `:` separator is accepted too).
/// States are written `sK` or as bit literals (`TFT`), inputs `uK` or bit
/// literals. Throws SyntaxError, Error(index_out_of_range),
/// Error(inconsistent_kind) or Error(validation).
ProblemSpec parse_problem(std::string_view text, const NetworkModel& model);

/// Reads only the constraint keys of a problem-style file.
Constraints parse_constraints(std::string_view text, const NetworkModel& model);

StateIndex parse_state_ref(std::string_view token, const NetworkModel& model);
InputIndex parse_input_ref(std::string_view token, const NetworkModel& model);

std::string_view to_string(ProblemKind kind);

}  // namespace bcnfoc
