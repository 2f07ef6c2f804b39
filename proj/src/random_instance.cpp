#include "bcnfoc/random_instance.hpp"

#include <random>

#include "bcnfoc/model.hpp"
#include "bcnfoc/oracle.hpp"

namespace bcnfoc {

namespace {

class Generator {
 public:
  Generator(std::uint64_t seed, const RandomInstanceOptions& options) : rng_(seed), options_(options) {}

  RandomInstance next() {
    RandomInstance out;
    const std::size_t n = 1 + below(options_.max_state_vars);
    const std::size_t m = options_.max_input_vars == 0 || chance(0.1) ? 0 : 1 + below(options_.max_input_vars);
    states_.clear();
    inputs_.clear();
    for (std::size_t i = 1; i <= n; ++i) states_.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= m; ++i) inputs_.push_back("u" + std::to_string(i));

    if (m > 0) out.network_text += "inputs: " + join(inputs_) + "\n";
    out.network_text += "states: " + join(states_) + "\n";
    for (const auto& s : states_) out.network_text += "next " + s + " = " + expression(0) + "\n";

    const std::size_t big_n = std::size_t{1} << n;
    const std::size_t big_m = std::size_t{1} << m;
    const bool fixed_time = options_.kind == ProblemKind::fixed_time;
    const std::size_t x0 = 1 + below(big_n);

    std::string& p = out.problem_text;
    p += fixed_time ? "kind = fixed-time\n" : "kind = fixed-destination\n";
    p += "x0 = s" + std::to_string(x0) + "\n";
    if (fixed_time) p += "horizon = " + std::to_string(below(options_.max_horizon + 1)) + "\n";

    std::vector<std::size_t> omega;
    for (std::size_t i = 1; i <= big_n; ++i) {
      if (chance(0.3)) omega.push_back(i);
    }
    if (omega.empty()) omega.push_back(1 + below(big_n));
    if (!fixed_time || !chance(0.1)) p += "omega = " + refs('s', omega) + "\n";

    std::vector<std::size_t> forbidden;
    for (std::size_t i = 1; i <= big_n; ++i) {
      if (i != x0 && chance(0.15)) forbidden.push_back(i);
    }
    if (!forbidden.empty()) p += "forbid states = " + refs('s', forbidden) + "\n";

    std::vector<std::size_t> allowed = subset(big_m, 0.8);
    if (allowed.empty()) allowed.push_back(1 + below(big_m));
    p += "allow inputs = " + refs('u', allowed) + "\n";
    for (std::size_t i = 1; i <= big_n; ++i) {
      if (!chance(0.15)) continue;
      p += "allow inputs at s" + std::to_string(i) + " = " + refs('u', subset(big_m, 0.6)) + "\n";
    }

    std::vector<std::string> terms;
    if (chance(0.7)) terms.push_back("xw[" + table(big_n) + "]");
    if (chance(0.7)) terms.push_back("uw[" + table(big_m) + "]");
    if (chance(0.3)) terms.push_back(std::to_string(below(4)) + "*xbit(" + std::to_string(1 + below(n)) + ")");
    if (m > 0 && chance(0.3)) terms.push_back(std::to_string(below(4)) + "*ubit(" + std::to_string(1 + below(m)) + ")");
    if (terms.empty()) terms.push_back(std::to_string(below(10)));
    p += "stage_cost = " + join(terms, " + ") + "\n";
    p += "terminal_cost = " + (chance(0.8) ? "xw[" + table(big_n) + "]" : std::to_string(below(10))) + "\n";
    return out;
  }

 private:
  std::size_t below(std::size_t bound) { return bound == 0 ? 0 : static_cast<std::size_t>(rng_() % bound); }
  bool chance(double p) { return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p; }

  std::string expression(int depth) {
    if (depth >= 3 || chance(0.3 + 0.2 * depth)) {
      const std::size_t total = states_.size() + inputs_.size();
      const std::size_t pick = below(total);
      return pick < states_.size() ? states_[pick] : inputs_[pick - states_.size()];
    }
    switch (below(4)) {
      case 0: return "!" + wrap(expression(depth + 1));
      case 1: return wrap(expression(depth + 1)) + " & " + wrap(expression(depth + 1));
      case 2: return wrap(expression(depth + 1)) + " | " + wrap(expression(depth + 1));
      default: return wrap(expression(depth + 1)) + " ^ " + wrap(expression(depth + 1));
    }
  }

  static std::string wrap(const std::string& e) {
    return e.find(' ') == std::string::npos && e[0] != '!' ? e : "(" + e + ")";
  }

  std::string table(std::size_t size) {
    std::vector<std::string> entries;
    for (std::size_t i = 0; i < size; ++i) {
      std::string e = std::to_string(below(10));
      if (options_.time_variant && chance(0.3)) e += " + " + std::to_string(1 + below(2)) + "*t";
      entries.push_back(e);
    }
    return join(entries, ", ");
  }

  std::vector<std::size_t> subset(std::size_t size, double p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= size; ++i) {
      if (chance(p)) out.push_back(i);
    }
    return out;
  }

  static std::string refs(char prefix, const std::vector<std::size_t>& items) {
    std::string out;
    for (std::size_t v : items) {
      if (!out.empty()) out += ", ";
      out += prefix + std::to_string(v);
    }
    return out;
  }

  static std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
    std::string out;
    for (const auto& s : items) {
      if (!out.empty()) out += sep;
      out += s;
    }
    return out;
  }

  std::mt19937_64 rng_;
  RandomInstanceOptions options_;
  std::vector<std::string> states_;
  std::vector<std::string> inputs_;
};

}  // namespace

RandomInstance random_instance(std::uint64_t seed, const RandomInstanceOptions& options) {
  Generator gen(seed, options);
  for (;;) {
    RandomInstance candidate = gen.next();
    const NetworkModel model = parse_network(candidate.network_text);
    const ProblemSpec spec = parse_problem(candidate.problem_text, model);
    if (enumeration_size(model, spec) <= options.max_enumeration) return candidate;
  }
}

}  // namespace bcnfoc
