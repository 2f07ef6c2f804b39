#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcnfoc/diagnostics.hpp"
#include "bcnfoc/types.hpp"

namespace bcnfoc {

enum class CostRole { stage, terminal };
enum class ProblemKind { fixed_time, fixed_destination };

/// Variable counts a cost expression is checked and evaluated against.
struct CostDims {
  std::size_t state_vars = 0;
  std::size_t input_vars = 0;

  std::size_t state_count() const { return std::size_t{1} << state_vars; }
  std::size_t input_count() const { return std::size_t{1} << input_vars; }
};

/// Stage cost g(x, u, t) or terminal cost h(x, t) as an expression tree.
///
/// Atoms: numbers, `t`, `xbit(j)` / `ubit(j)` (1 when variable j is TRUE),
/// and index-weight tables `xw[...]` / `uw[...]` whose entries are
/// arithmetic expressions in `t`. A diagonal quadratic form x'Rx is written
/// as `xw[R_11, ..., R_NN]`; a general N x M cost table can be spelled as a
/// sum of `xw[...] * uw[...]` products or precomputed per state.
class CostSpec {
 public:
  /// The zero cost. A cost built without dims accepts any index.
  explicit CostSpec(CostDims dims = {}, CostRole role = CostRole::stage);

  CostRole role() const noexcept { return role_; }
  const CostDims& dims() const noexcept { return dims_; }
  const std::string& source() const noexcept { return source_; }

  /// Evaluates at state i, input k (ignored by terminal costs) and time t.
  double evaluate(StateIndex i, InputIndex k, std::int64_t t) const;

  /// The cost minus `offset`, as a new expression.
  CostSpec shifted(double offset) const;

 private:
  friend CostSpec parse_cost(std::string_view, CostDims, CostRole, TextOrigin);
  friend class CostParser;

  enum class NodeKind : std::uint8_t { number, time, xbit, ubit, xw, uw, add, sub, mul, neg };
  struct Node {
    NodeKind kind;
    double value = 0.0;
    std::uint32_t a = 0;  // operand / variable / table id
    std::uint32_t b = 0;
  };

  double eval_node(std::uint32_t id, StateIndex i, InputIndex k, std::int64_t t) const;

  CostRole role_ = CostRole::stage;
  CostDims dims_;
  std::string source_ = "0";
  std::vector<Node> nodes_;
  std::vector<std::vector<std::uint32_t>> tables_;
  std::uint32_t root_ = 0;
};

/// Throws SyntaxError, Error(table_length_mismatch), Error(ubit_in_terminal_cost)
/// or Error(index_out_of_range).
CostSpec parse_cost(std::string_view text, CostDims dims, CostRole role, TextOrigin origin = {});

double eval_stage(const CostSpec& g, StateIndex i, InputIndex k, std::int64_t t);
double eval_terminal(const CostSpec& h, StateIndex i, std::int64_t t);

struct WeightedControl {
  double weight;
  InputIndex control;
};

/// min over k in `controls` of g(i, k, t) and its argmin (smallest index on ties).
WeightedControl edge_weight(const CostSpec& g, StateIndex i, std::span<const InputIndex> controls,
                            std::int64_t t);

struct AssumptionReport {
  double stage_min = 0.0;
  double terminal_min = 0.0;
  /// Violations only; warnings for fixed-time, errors for fixed-destination.
  std::vector<Diagnostic> diagnostics;
};

/// Exhaustive check of g over all (i, k, t) and h over omega x [0, t_max]:
/// negative stage costs and strict decreases in t are reported.
AssumptionReport check_assumptions(const CostSpec& g, const CostSpec& h, ProblemKind kind,
                                   std::span<const StateIndex> omega, std::int64_t t_max);

struct ShiftedTerminal {
  CostSpec cost;
  /// B_h <= 0; the shifted cost is h - B_h and B_h is added back to J*.
  double offset = 0.0;
};

ShiftedTerminal terminal_shift(const CostSpec& h, std::span<const StateIndex> omega,
                               std::int64_t t_max);

/// True when g(i, k, t) == g(i, k, 0) for every i in states, every input and
/// t in [1, t_max], and likewise h on omega.
bool is_time_invariant(const CostSpec& g, const CostSpec& h, std::span<const StateIndex> states,
                       std::span<const StateIndex> omega, std::int64_t t_max);

}  // namespace bcnfoc
