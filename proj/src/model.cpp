#include "bcnfoc/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "bcnfoc/errors.hpp"

namespace bcnfoc {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

TransitionMatrix checked_transitions(const std::vector<std::string>& states, const std::vector<std::string>& inputs,
                                     const std::vector<BoolExpr>& updates) {
  std::unordered_set<std::string> seen;
  for (const auto* names : {&inputs, &states}) {
    for (const auto& name : *names) {
      if (!seen.insert(name).second) {
        throw Error(ErrorKind::duplicate_rule, "variable '" + name + "' declared twice");
      }
    }
  }
  if (states.empty()) throw Error(ErrorKind::missing_rule, "a network needs at least one state variable");
  if (updates.size() != states.size()) {
    throw Error(ErrorKind::missing_rule, "expected " + std::to_string(states.size()) + " update rules, got " +
                                             std::to_string(updates.size()));
  }
  for (const auto& rule : updates) {
    for (const auto& var : rule.variables()) {
      if (!seen.contains(var)) throw Error(ErrorKind::unknown_variable, "unknown variable '" + var + "'");
    }
  }
  return build_transition_matrix(states, inputs, updates);
}

struct Line {
  int number;
  std::string_view text;  // comment stripped
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    out.push_back({number, line});
    start = end + 1;
  }
  return out;
}

std::size_t first_non_space(std::string_view s, std::size_t from = 0) {
  while (from < s.size() && std::isspace(static_cast<unsigned char>(s[from]))) ++from;
  return from;
}

struct Token {
  std::string_view text;
  int column;  // 1-based
};

/// Items separated by commas and/or whitespace.
std::vector<Token> split_list(std::string_view s, int column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != ',') ++i;
    if (i > start) out.push_back({s.substr(start, i - start), column + static_cast<int>(start)});
  }
  return out;
}

std::optional<std::uint64_t> parse_unsigned(std::string_view s) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::uint32_t parse_ref(std::string_view token, char prefix, std::size_t vars, const char* what) {
  const std::uint64_t count = std::uint64_t{1} << vars;
  if (!token.empty() && token[0] == prefix) {
    const auto value = parse_unsigned(token.substr(1));
    if (!value) throw Error(ErrorKind::syntax, std::string("malformed ") + what + " '" + std::string(token) + "'");
    if (*value < 1 || *value > count) {
      throw Error(ErrorKind::index_out_of_range, std::string(what) + " " + std::string(token) + " outside [1, " +
                                                     std::to_string(count) + "]");
    }
    return static_cast<std::uint32_t>(*value);
  }
  if (!token.empty() && token.find_first_not_of("TF") == std::string_view::npos) {
    if (token.size() != vars) {
      throw Error(ErrorKind::index_out_of_range, std::string("bit literal '") + std::string(token) + "' needs " +
                                                     std::to_string(vars) + " characters");
    }
    return from_bit_literal(token);
  }
  throw Error(ErrorKind::syntax, std::string("expected a ") + what + ", got '" + std::string(token) + "'");
}

/// Re-throws plain syntax errors from reference parsing with a position.
template <typename F>
auto at_position(int line, int column, F&& f) {
  try {
    return f();
  } catch (const SyntaxError&) {
    throw;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::syntax) throw SyntaxError(line, column, e.what());
    throw Error(e.kind(), "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
}

struct KeyValue {
  int line;
  std::string key;  // lower-case words joined by single spaces
  std::string_view value;
  int value_column;
  int key_column;
};

std::vector<KeyValue> split_key_values(std::string_view text) {
  std::vector<KeyValue> out;
  for (const Line& line : split_lines(text)) {
    const std::size_t begin = first_non_space(line.text);
    if (begin == line.text.size()) continue;
    std::size_t sep = line.text.find('=');
    if (sep == std::string_view::npos) sep = line.text.find(':');
    if (sep == std::string_view::npos) {
      throw SyntaxError(line.number, static_cast<int>(begin) + 1, "expected 'key = value'");
    }
    std::string key;
    for (const Token& word : split_list(line.text.substr(0, sep), 1)) {
      if (!key.empty()) key.push_back(' ');
      key.append(word.text);
    }
    const std::size_t vstart = first_non_space(line.text, sep + 1);
    out.push_back({line.number, key, line.text.substr(vstart), static_cast<int>(vstart) + 1,
                   static_cast<int>(begin) + 1});
  }
  return out;
}

std::set<InputIndex> parse_input_set(const KeyValue& kv, const NetworkModel& model) {
  std::set<InputIndex> out;
  for (const Token& tok : split_list(kv.value, kv.value_column)) {
    out.insert(at_position(kv.line, tok.column, [&] { return parse_input_ref(tok.text, model); }));
  }
  return out;
}

std::set<StateIndex> parse_state_set(const KeyValue& kv, const NetworkModel& model) {
  std::set<StateIndex> out;
  for (const Token& tok : split_list(kv.value, kv.value_column)) {
    out.insert(at_position(kv.line, tok.column, [&] { return parse_state_ref(tok.text, model); }));
  }
  return out;
}

/// Handles the constraint keys; returns false for any other key.
bool apply_constraint_key(const KeyValue& kv, const NetworkModel& model, Constraints& c, bool& default_seen) {
  if (kv.key == "forbid states") {
    auto states = parse_state_set(kv, model);
    c.forbidden_states.insert(states.begin(), states.end());
    return true;
  }
  if (kv.key == "allow inputs") {
    if (default_seen) throw SyntaxError(kv.line, kv.key_column, "duplicate key 'allow inputs'");
    default_seen = true;
    c.default_allowed_inputs = parse_input_set(kv, model);
    return true;
  }
  constexpr std::string_view prefix = "allow inputs at ";
  if (kv.key.starts_with(prefix)) {
    const std::string_view ref = std::string_view(kv.key).substr(prefix.size());
    const StateIndex state = at_position(kv.line, kv.key_column, [&] { return parse_state_ref(ref, model); });
    if (c.per_state_inputs.contains(state)) {
      throw SyntaxError(kv.line, kv.key_column, "duplicate input override for s" + std::to_string(state));
    }
    c.per_state_inputs[state] = parse_input_set(kv, model);
    return true;
  }
  return false;
}

}  // namespace

NetworkModel::NetworkModel(std::vector<std::string> state_names, std::vector<std::string> input_names,
                           std::vector<BoolExpr> updates)
    : state_names_(std::move(state_names)),
      input_names_(std::move(input_names)),
      updates_(std::move(updates)),
      transitions_(checked_transitions(state_names_, input_names_, updates_)) {}

NetworkModel parse_network(std::string_view text) {
  std::optional<std::vector<std::string>> states;
  std::optional<std::vector<std::string>> inputs;
  std::unordered_map<std::string, std::pair<BoolExpr, int>> rules;
  int states_line = 0;

  auto read_names = [](const Line& line, std::size_t value_start) {
    std::vector<std::string> names;
    std::unordered_set<std::string> seen;
    for (const Token& tok : split_list(line.text.substr(value_start), static_cast<int>(value_start) + 1)) {
      if (!is_identifier(tok.text)) {
        throw SyntaxError(line.number, tok.column, "invalid name '" + std::string(tok.text) + "'");
      }
      if (!seen.insert(std::string(tok.text)).second) {
        throw SyntaxError(line.number, tok.column, "name '" + std::string(tok.text) + "' declared twice");
      }
      names.emplace_back(tok.text);
    }
    return names;
  };

  for (const Line& line : split_lines(text)) {
    const std::size_t begin = first_non_space(line.text);
    if (begin == line.text.size()) continue;
    const std::string_view body = line.text.substr(begin);
    const int col = static_cast<int>(begin) + 1;

    if (body.starts_with("inputs") && first_non_space(body, 6) < body.size() && body[first_non_space(body, 6)] == ':') {
      if (inputs) throw SyntaxError(line.number, col, "inputs declared twice");
      inputs = read_names(line, begin + first_non_space(body, 6) + 1);
    } else if (body.starts_with("states") && first_non_space(body, 6) < body.size() &&
               body[first_non_space(body, 6)] == ':') {
      if (states) throw SyntaxError(line.number, col, "states declared twice");
      states = read_names(line, begin + first_non_space(body, 6) + 1);
      states_line = line.number;
      if (states->empty()) throw SyntaxError(line.number, col, "empty state list");
    } else if (body.starts_with("next") && body.size() > 4 && std::isspace(static_cast<unsigned char>(body[4]))) {
      const std::size_t name_start = first_non_space(body, 4);
      std::size_t name_end = name_start;
      while (name_end < body.size() && (std::isalnum(static_cast<unsigned char>(body[name_end])) || body[name_end] == '_')) {
        ++name_end;
      }
      const std::size_t eq = first_non_space(body, name_end);
      if (name_end == name_start) throw SyntaxError(line.number, col + static_cast<int>(name_start), "expected a state name");
      if (eq >= body.size() || body[eq] != '=') throw SyntaxError(line.number, col + static_cast<int>(eq), "expected '='");
      const std::string name(body.substr(name_start, name_end - name_start));
      BoolExpr expr = parse_bool_expr(body.substr(eq + 1), {line.number, col + static_cast<int>(eq) + 1});
      if (rules.contains(name)) {
        throw Error(ErrorKind::duplicate_rule, "line " + std::to_string(line.number) + ": second rule for '" + name + "'");
      }
      rules.emplace(name, std::make_pair(std::move(expr), line.number));
    } else {
      throw SyntaxError(line.number, col, "expected 'inputs:', 'states:' or 'next'");
    }
  }

  if (!states) throw SyntaxError(1, 1, "missing 'states:' declaration");
  if (!inputs) inputs.emplace();

  std::unordered_set<std::string> declared(inputs->begin(), inputs->end());
  for (const auto& s : *states) {
    if (declared.contains(s)) throw SyntaxError(states_line, 1, "'" + s + "' is both an input and a state");
  }
  declared.insert(states->begin(), states->end());

  for (const auto& [name, rule] : rules) {
    if (std::find(states->begin(), states->end(), name) == states->end()) {
      throw Error(ErrorKind::unknown_variable,
                  "line " + std::to_string(rule.second) + ": rule for undeclared state '" + name + "'");
    }
    for (const auto& var : rule.first.variables()) {
      if (!declared.contains(var)) {
        throw Error(ErrorKind::unknown_variable,
                    "line " + std::to_string(rule.second) + ": unknown variable '" + var + "'");
      }
    }
  }

  std::vector<BoolExpr> updates;
  updates.reserve(states->size());
  for (const auto& s : *states) {
    auto it = rules.find(s);
    if (it == rules.end()) throw Error(ErrorKind::missing_rule, "no 'next' rule for state '" + s + "'");
    updates.push_back(std::move(it->second.first));
  }
  return NetworkModel(std::move(*states), std::move(*inputs), std::move(updates));
}

std::string to_text(const NetworkModel& model) {
  auto join = [](const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) {
      if (!out.empty()) out += ", ";
      out += n;
    }
    return out;
  };
  std::string out;
  if (!model.input_names().empty()) out += "inputs: " + join(model.input_names()) + "\n";
  out += "states: " + join(model.state_names()) + "\n";
  for (std::size_t i = 0; i < model.state_vars(); ++i) {
    out += "next " + model.state_names()[i] + " = " + to_string(model.updates()[i]) + "\n";
  }
  return out;
}

Constraints Constraints::unconstrained(std::size_t input_count) {
  Constraints c;
  for (std::size_t k = 1; k <= input_count; ++k) c.default_allowed_inputs.insert(static_cast<InputIndex>(k));
  return c;
}

StateIndex parse_state_ref(std::string_view token, const NetworkModel& model) {
  return parse_ref(token, 's', model.state_vars(), "state");
}

InputIndex parse_input_ref(std::string_view token, const NetworkModel& model) {
  return parse_ref(token, 'u', model.input_vars(), "input");
}

Constraints parse_constraints(std::string_view text, const NetworkModel& model) {
  Constraints c = Constraints::unconstrained(model.input_count());
  bool default_seen = false;
  for (const KeyValue& kv : split_key_values(text)) apply_constraint_key(kv, model, c, default_seen);
  return c;
}

ProblemSpec parse_problem(std::string_view text, const NetworkModel& model) {
  ProblemSpec spec;
  spec.constraints = Constraints::unconstrained(model.input_count());
  bool default_seen = false;
  std::optional<ProblemKind> kind;
  std::optional<StateIndex> x0;
  std::optional<std::set<StateIndex>> omega;
  std::optional<std::size_t> horizon;
  std::optional<KeyValue> stage;
  std::optional<KeyValue> terminal;
  int horizon_line = 0;
  std::unordered_set<std::string> seen;

  for (const KeyValue& kv : split_key_values(text)) {
    if (apply_constraint_key(kv, model, spec.constraints, default_seen)) continue;
    if (!seen.insert(kv.key).second) throw SyntaxError(kv.line, kv.key_column, "duplicate key '" + kv.key + "'");
    if (kv.key == "kind") {
      if (kv.value == "fixed-time") {
        kind = ProblemKind::fixed_time;
      } else if (kv.value == "fixed-destination") {
        kind = ProblemKind::fixed_destination;
      } else {
        throw SyntaxError(kv.line, kv.value_column, "kind must be 'fixed-time' or 'fixed-destination'");
      }
    } else if (kv.key == "x0") {
      const auto tokens = split_list(kv.value, kv.value_column);
      if (tokens.size() != 1) throw SyntaxError(kv.line, kv.value_column, "x0 takes exactly one state");
      x0 = at_position(kv.line, tokens[0].column, [&] { return parse_state_ref(tokens[0].text, model); });
    } else if (kv.key == "omega") {
      omega = parse_state_set(kv, model);
    } else if (kv.key == "horizon") {
      const auto value = parse_unsigned(kv.value);
      if (!value) throw SyntaxError(kv.line, kv.value_column, "horizon must be a nonnegative integer");
      horizon = static_cast<std::size_t>(*value);
      horizon_line = kv.line;
    } else if (kv.key == "stage_cost") {
      stage = kv;
    } else if (kv.key == "terminal_cost") {
      terminal = kv;
    } else {
      throw SyntaxError(kv.line, kv.key_column, "unknown key '" + kv.key + "'");
    }
  }

  if (!kind) throw SyntaxError(1, 1, "missing 'kind'");
  if (!x0) throw SyntaxError(1, 1, "missing 'x0'");
  spec.kind = *kind;
  spec.x0 = *x0;
  if (spec.kind == ProblemKind::fixed_time) {
    if (!horizon) throw SyntaxError(1, 1, "fixed-time problems need a 'horizon'");
    spec.horizon = *horizon;
    if (omega) {
      spec.omega = std::move(*omega);
    } else {
      for (std::size_t i = 1; i <= model.state_count(); ++i) spec.omega.insert(static_cast<StateIndex>(i));
    }
  } else {
    if (horizon) {
      throw Error(ErrorKind::inconsistent_kind,
                  "line " + std::to_string(horizon_line) + ": 'horizon' is only valid for fixed-time problems");
    }
    if (!omega) throw SyntaxError(1, 1, "fixed-destination problems need 'omega'");
    spec.omega = std::move(*omega);
  }
  if (spec.omega.empty()) throw Error(ErrorKind::validation, "omega must not be empty");
  if (spec.constraints.forbidden_states.contains(spec.x0)) {
    throw Error(ErrorKind::validation, "x0 = s" + std::to_string(spec.x0) + " is a forbidden state");
  }

  const CostDims dims = model.cost_dims();
  spec.stage_cost = stage ? parse_cost(stage->value, dims, CostRole::stage, {stage->line, stage->value_column})
                          : parse_cost("0", dims, CostRole::stage);
  spec.terminal_cost = terminal ? parse_cost(terminal->value, dims, CostRole::terminal,
                                             {terminal->line, terminal->value_column})
                                : parse_cost("0", dims, CostRole::terminal);
  return spec;
}

std::string_view to_string(ProblemKind kind) {
  return kind == ProblemKind::fixed_time ? "fixed-time" : "fixed-destination";
}

}  // namespace bcnfoc
