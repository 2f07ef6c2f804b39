#include "bcnfoc/cost.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "bcnfoc/errors.hpp"
#include "bcnfoc/stp.hpp"

namespace bcnfoc {

CostSpec::CostSpec(CostDims dims, CostRole role) : role_(role), dims_(dims) {
  nodes_.push_back({NodeKind::number, 0.0, 0, 0});
}

double CostSpec::evaluate(StateIndex i, InputIndex k, std::int64_t t) const { return eval_node(root_, i, k, t); }

double CostSpec::eval_node(std::uint32_t id, StateIndex i, InputIndex k, std::int64_t t) const {
  const Node& n = nodes_[id];
  switch (n.kind) {
    case NodeKind::number: return n.value;
    case NodeKind::time: return static_cast<double>(t);
    case NodeKind::xbit: return variable_value(i, dims_.state_vars, n.a) ? 1.0 : 0.0;
    case NodeKind::ubit: return variable_value(k, dims_.input_vars, n.a) ? 1.0 : 0.0;
    case NodeKind::xw: return eval_node(tables_[n.a][i - 1], i, k, t);
    case NodeKind::uw: return eval_node(tables_[n.a][k - 1], i, k, t);
    case NodeKind::add: return eval_node(n.a, i, k, t) + eval_node(n.b, i, k, t);
    case NodeKind::sub: return eval_node(n.a, i, k, t) - eval_node(n.b, i, k, t);
    case NodeKind::mul: return eval_node(n.a, i, k, t) * eval_node(n.b, i, k, t);
    case NodeKind::neg: return -eval_node(n.a, i, k, t);
  }
  return 0.0;
}

CostSpec CostSpec::shifted(double offset) const {
  CostSpec out = *this;
  if (offset == 0.0) return out;
  const auto literal = static_cast<std::uint32_t>(out.nodes_.size());
  out.nodes_.push_back({NodeKind::number, offset, 0, 0});
  out.nodes_.push_back({NodeKind::sub, 0.0, root_, literal});
  out.root_ = static_cast<std::uint32_t>(out.nodes_.size() - 1);
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, offset);
  out.source_ = "(" + source_ + ") - (" + std::string(buf, end) + ")";
  return out;
}

class CostParser {
 public:
  CostParser(std::string_view text, CostDims dims, CostRole role, TextOrigin origin)
      : text_(text), origin_(origin), spec_(dims, role) {
    spec_.nodes_.clear();
  }

  CostSpec parse() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a cost expression");
    spec_.root_ = parse_expr(false);
    skip_space();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    spec_.source_ = std::string(text_);
    return std::move(spec_);
  }

 private:
  using NodeKind = CostSpec::NodeKind;

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(origin_.line, origin_.column + static_cast<int>(pos_), message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::uint32_t add(CostSpec::Node node) {
    spec_.nodes_.push_back(node);
    return static_cast<std::uint32_t>(spec_.nodes_.size() - 1);
  }

  // `in_table` restricts the grammar to {number, t, +, -, *, parentheses}.
  std::uint32_t parse_expr(bool in_table) {
    std::uint32_t lhs = parse_term(in_table);
    for (;;) {
      if (accept('+')) {
        lhs = add({NodeKind::add, 0.0, lhs, parse_term(in_table)});
      } else if (accept('-')) {
        lhs = add({NodeKind::sub, 0.0, lhs, parse_term(in_table)});
      } else {
        return lhs;
      }
    }
  }

  std::uint32_t parse_term(bool in_table) {
    std::uint32_t lhs = parse_factor(in_table);
    while (accept('*')) lhs = add({NodeKind::mul, 0.0, lhs, parse_factor(in_table)});
    return lhs;
  }

  std::uint32_t parse_factor(bool in_table) {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of cost expression");
    if (accept('-')) return add({NodeKind::neg, 0.0, parse_factor(in_table), 0});
    if (accept('(')) {
      const std::uint32_t inner = parse_expr(in_table);
      expect(')');
      return inner;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected '") + c + "'");

    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word == "t") return add({NodeKind::time, 0.0, 0, 0});
    if (in_table) {
      pos_ = start;
      fail("table entries may only use numbers and t");
    }
    if (word == "xbit" || word == "ubit") return parse_bit(word == "ubit", start);
    if (word == "xw" || word == "uw") return parse_table(word == "uw", start);
    pos_ = start;
    fail("unknown identifier '" + std::string(word) + "'");
  }

  std::uint32_t parse_number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' || text_[pos_] == 'e' ||
            text_[pos_] == 'E' ||
            ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > start &&
             (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
      ++pos_;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{} || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    return add({NodeKind::number, value, 0, 0});
  }

  std::uint32_t parse_bit(bool input, std::size_t start) {
    if (input && spec_.role_ == CostRole::terminal) {
      throw Error(ErrorKind::ubit_in_terminal_cost, "terminal costs cannot depend on inputs (ubit at column " +
                                                        std::to_string(origin_.column + start) + ")");
    }
    expect('(');
    skip_space();
    const std::size_t num_start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == num_start) fail("expected a variable number");
    std::size_t var = 0;
    std::from_chars(text_.data() + num_start, text_.data() + pos_, var);
    expect(')');
    const std::size_t limit = input ? spec_.dims_.input_vars : spec_.dims_.state_vars;
    if (var < 1 || var > limit) {
      throw Error(ErrorKind::index_out_of_range, std::string(input ? "ubit(" : "xbit(") + std::to_string(var) +
                                                     ") outside [1, " + std::to_string(limit) + "]");
    }
    return add({input ? NodeKind::ubit : NodeKind::xbit, 0.0, static_cast<std::uint32_t>(var), 0});
  }

  std::uint32_t parse_table(bool input, std::size_t start) {
    if (input && spec_.role_ == CostRole::terminal) {
      throw Error(ErrorKind::ubit_in_terminal_cost, "terminal costs cannot depend on inputs (uw at column " +
                                                        std::to_string(origin_.column + start) + ")");
    }
    expect('[');
    std::vector<std::uint32_t> entries;
    do {
      entries.push_back(parse_expr(true));
    } while (accept(','));
    expect(']');
    const std::size_t expected = input ? spec_.dims_.input_count() : spec_.dims_.state_count();
    if (entries.size() != expected) {
      throw Error(ErrorKind::table_length_mismatch, std::string(input ? "uw" : "xw") + " table has " +
                                                        std::to_string(entries.size()) + " entries, expected " +
                                                        std::to_string(expected));
    }
    spec_.tables_.push_back(std::move(entries));
    return add({input ? NodeKind::uw : NodeKind::xw, 0.0, static_cast<std::uint32_t>(spec_.tables_.size() - 1), 0});
  }

  std::string_view text_;
  TextOrigin origin_;
  std::size_t pos_ = 0;
  CostSpec spec_;
};

CostSpec parse_cost(std::string_view text, CostDims dims, CostRole role, TextOrigin origin) {
  return CostParser(text, dims, role, origin).parse();
}

namespace {

void check_index(const CostSpec& c, StateIndex i, std::optional<InputIndex> k) {
  if (c.dims().state_vars == 0) return;
  if (i < 1 || i > c.dims().state_count()) {
    throw Error(ErrorKind::index_out_of_range, "state index " + std::to_string(i) + " out of range");
  }
  if (k && (*k < 1 || *k > c.dims().input_count())) {
    throw Error(ErrorKind::index_out_of_range, "input index " + std::to_string(*k) + " out of range");
  }
}

// Numerical slack for "strict decrease" so that rounding in fractional
// coefficients is not reported as a violation.
constexpr double kDecreaseTolerance = 1e-9;
constexpr int kMaxReported = 5;

}  // namespace

double eval_stage(const CostSpec& g, StateIndex i, InputIndex k, std::int64_t t) {
  check_index(g, i, k);
  if (t < 0) throw Error(ErrorKind::index_out_of_range, "time must be nonnegative");
  return g.evaluate(i, k, t);
}

double eval_terminal(const CostSpec& h, StateIndex i, std::int64_t t) {
  check_index(h, i, std::nullopt);
  if (t < 0) throw Error(ErrorKind::index_out_of_range, "time must be nonnegative");
  return h.evaluate(i, 1, t);
}

WeightedControl edge_weight(const CostSpec& g, StateIndex i, std::span<const InputIndex> controls,
                            std::int64_t t) {
  if (controls.empty()) throw Error(ErrorKind::empty_control_set, "no control realizes this transition");
  WeightedControl best{std::numeric_limits<double>::infinity(), 0};
  for (InputIndex k : controls) {
    const double w = g.evaluate(i, k, t);
    if (w < best.weight || (w == best.weight && k < best.control)) best = {w, k};
  }
  return best;
}

AssumptionReport check_assumptions(const CostSpec& g, const CostSpec& h, ProblemKind kind,
                                   std::span<const StateIndex> omega, std::int64_t t_max) {
  AssumptionReport report;
  const Severity severity = kind == ProblemKind::fixed_destination ? Severity::error : Severity::warning;
  const CostDims dims = g.dims().state_vars != 0 ? g.dims() : h.dims();
  const auto states = static_cast<StateIndex>(dims.state_count());
  const auto inputs = static_cast<InputIndex>(dims.input_count());
  t_max = std::max<std::int64_t>(t_max, 0);

  report.stage_min = std::numeric_limits<double>::infinity();
  int negative = 0;
  int decreasing = 0;
  std::string first_negative;
  std::string first_decrease;
  for (StateIndex i = 1; i <= states; ++i) {
    for (InputIndex k = 1; k <= inputs; ++k) {
      double previous = 0.0;
      for (std::int64_t t = 0; t <= t_max; ++t) {
        const double v = g.evaluate(i, k, t);
        report.stage_min = std::min(report.stage_min, v);
        if (v < 0.0 && negative++ < kMaxReported) {
          first_negative += " g(s" + std::to_string(i) + ", u" + std::to_string(k) + ", " + std::to_string(t) + ")";
        }
        if (t > 0 && v < previous - kDecreaseTolerance && decreasing++ < kMaxReported) {
          first_decrease += " g(s" + std::to_string(i) + ", u" + std::to_string(k) + ", " + std::to_string(t) + ")";
        }
        previous = v;
      }
    }
  }
  if (negative > 0) {
    report.diagnostics.push_back({severity, "negative-stage-cost",
                                  std::to_string(negative) + " negative stage cost value(s), e.g." + first_negative});
  }
  if (decreasing > 0) {
    report.diagnostics.push_back(
        {severity, "stage-cost-decreasing",
         "stage cost decreases in time at " + std::to_string(decreasing) + " point(s), e.g." + first_decrease});
  }

  report.terminal_min = std::numeric_limits<double>::infinity();
  int terminal_decreasing = 0;
  std::string first_terminal;
  for (StateIndex i : omega) {
    double previous = 0.0;
    for (std::int64_t t = 0; t <= t_max; ++t) {
      const double v = h.evaluate(i, 1, t);
      report.terminal_min = std::min(report.terminal_min, v);
      if (t > 0 && v < previous - kDecreaseTolerance && terminal_decreasing++ < kMaxReported) {
        first_terminal += " h(s" + std::to_string(i) + ", " + std::to_string(t) + ")";
      }
      previous = v;
    }
  }
  if (omega.empty()) report.terminal_min = 0.0;
  if (terminal_decreasing > 0) {
    report.diagnostics.push_back({severity, "terminal-cost-decreasing",
                                  "terminal cost decreases in time at " + std::to_string(terminal_decreasing) +
                                      " point(s), e.g." + first_terminal});
  }
  return report;
}

ShiftedTerminal terminal_shift(const CostSpec& h, std::span<const StateIndex> omega, std::int64_t t_max) {
  double low = 0.0;
  for (StateIndex i : omega) {
    for (std::int64_t t = 0; t <= t_max; ++t) low = std::min(low, h.evaluate(i, 1, t));
  }
  return {h.shifted(low), low};
}

bool is_time_invariant(const CostSpec& g, const CostSpec& h, std::span<const StateIndex> states,
                       std::span<const StateIndex> omega, std::int64_t t_max) {
  const auto inputs = static_cast<InputIndex>(g.dims().input_count());
  for (StateIndex i : states) {
    for (InputIndex k = 1; k <= inputs; ++k) {
      const double base = g.evaluate(i, k, 0);
      for (std::int64_t t = 1; t <= t_max; ++t) {
        if (g.evaluate(i, k, t) != base) return false;
      }
    }
  }
  for (StateIndex i : omega) {
    const double base = h.evaluate(i, 1, 0);
    for (std::int64_t t = 1; t <= t_max; ++t) {
      if (h.evaluate(i, 1, t) != base) return false;
    }
  }
  return true;
}

}  // namespace bcnfoc
