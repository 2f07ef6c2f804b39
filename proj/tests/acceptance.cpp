#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "bcnfoc/errors.hpp"
#include "bcnfoc/fixed_destination.hpp"
#include "bcnfoc/fixed_time.hpp"
#include "bcnfoc/oracle.hpp"
#include "bcnfoc/random_instance.hpp"
#include "bcnfoc/stp.hpp"
#include "cli.hpp"
#include "support.hpp"

using namespace bcnfoc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool same(double a, double b) { return std::fabs(a - b) <= 1e-9; }

std::string fmt(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

Check criterion1() {
  Check c;
  const auto start = Clock::now();
  const NetworkModel m = testing::load_model("three_gene/network.bcn");
  const ProblemSpec p = testing::load_spec("three_gene/fixed_time.prob", m);
  const Solution s = solve_fixed_time(m, p);
  const double elapsed = seconds_since(start);
  c.require(s.optimal_value == 11.0, "J = " + fmt(s.optimal_value));
  const auto replay = evaluate_controls(m, p, s.controls);
  c.require(replay && *replay == 11.0, "witness replay does not cost 11");
  c.require(evaluate_controls(m, p, std::vector<InputIndex>{4, 3, 4, 3}) == 11.0, "(4,3,4,3) does not cost 11");
  c.require(elapsed < 0.05, "runtime " + fmt(elapsed) + " s");
  if (c.ok) c.detail = "J = 11, " + fmt(elapsed * 1000) + " ms";
  return c;
}

Check criterion2() {
  Check c;
  const NetworkModel m = testing::load_model("three_gene/network.bcn");
  const ProblemSpec p = testing::load_spec("three_gene/stg_plus.prob", m);
  const Solution s = solve_fixed_dest(m, p);
  c.require(s.optimal_value == 13.0, "J = " + fmt(s.optimal_value));
  c.require(!s.trajectory.empty() && p.omega.contains(s.trajectory.back()), "trajectory does not end in the target set");
  const auto replay = evaluate_controls(m, p, s.controls);
  c.require(replay && *replay == 13.0, "witness replay does not cost 13");
  c.require(evaluate_controls(m, p, std::vector<InputIndex>{1, 3, 1}) == 13.0, "(1,3,1) does not cost 13");
  if (c.ok) c.detail = "J = 13";
  return c;
}

Check criterion3() {
  Check c;
  const NetworkModel m = testing::load_model("three_gene/network.bcn");
  const ProblemSpec p = testing::load_spec("three_gene/ted_stg.prob", m);
  const Solution s = solve_fixed_dest(m, p);
  const Solution q = horizon_sweep_fixed_dest(m, p);
  c.require(s.optimal_value == 14.0, "TED-STG J = " + fmt(s.optimal_value));
  c.require(q.optimal_value == 14.0, "horizon sweep J = " + fmt(q.optimal_value));
  const auto replay = evaluate_controls(m, p, s.controls);
  c.require(replay && *replay == 14.0, "witness replay does not cost 14");
  if (c.ok) c.detail = "TED-STG 14, horizon sweep 14";
  return c;
}

Check criterion4() {
  Check c;
  const auto start = Clock::now();
  const NetworkModel m = testing::load_model("ara/network.bcn");
  const ProblemSpec p = testing::load_spec("ara/min_energy.prob", m);
  const Solution s = solve_fixed_time(m, p);
  const double elapsed = seconds_since(start);
  c.require(s.stats.reachable_states == 108, "reachable = " + std::to_string(s.stats.reachable_states));
  c.require(s.optimal_value == 1108.0, "J = " + fmt(s.optimal_value));
  const auto replay = evaluate_controls(m, p, s.controls);
  c.require(replay && *replay == 1108.0, "witness replay does not cost 1108");
  const std::vector<StateIndex> reference{9, 457, 463, 480, 480, 480, 480, 352, 312, 288, 410};
  c.require(s.trajectory == reference || (replay && *replay == 1108.0), "trajectory is neither reference nor optimal");
  c.require(elapsed < 1.0, "runtime " + fmt(elapsed) + " s");
  if (c.ok) c.detail = "|R| = 108, J = 1108, " + fmt(elapsed * 1000) + " ms";
  return c;
}

Check criterion5() {
  Check c;
  const auto start = Clock::now();
  const NetworkModel m = testing::load_model("ara/network.bcn");
  const ProblemSpec p = testing::load_spec("ara/min_time.prob", m);
  const Solution s = solve_fixed_dest(m, p);
  const double elapsed = seconds_since(start);
  c.require(s.optimal_value == 3.0, "J = " + fmt(s.optimal_value));
  c.require(s.trajectory.size() == 4 && s.trajectory.front() == 9 && s.trajectory.back() == 410,
            "trajectory is not a 3-step path from s9 to s410");
  c.require(elapsed < 0.1, "runtime " + fmt(elapsed) + " s");
  if (c.ok) c.detail = "J = 3, " + fmt(elapsed * 1000) + " ms";
  return c;
}

Check criterion6() {
  Check c;
  RandomInstanceOptions o;
  o.kind = ProblemKind::fixed_time;
  o.time_variant = false;
  std::size_t feasible = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const RandomInstance inst = random_instance(seed, o);
    const NetworkModel m = parse_network(inst.network_text);
    const ProblemSpec p = parse_problem(inst.problem_text, m);
    const OracleResult r = brute_force_fixed_time(m, p);
    std::optional<double> solved;
    try {
      solved = solve_fixed_time(m, p).optimal_value;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::infeasible) throw;
    }
    const std::string tag = "seed " + std::to_string(seed);
    c.require(solved.has_value() == r.optimal_value.has_value(), tag + ": feasibility differs");
    if (solved && r.optimal_value) c.require(*solved == *r.optimal_value, tag + ": values differ");
    feasible += solved ? 1 : 0;
  }
  if (c.ok) c.detail = "100 instances, " + std::to_string(feasible) + " feasible";
  return c;
}

Check criterion7() {
  Check c;
  RandomInstanceOptions o;
  o.kind = ProblemKind::fixed_destination;
  std::size_t feasible = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const RandomInstance inst = random_instance(seed, o);
    const NetworkModel m = parse_network(inst.network_text);
    const ProblemSpec p = parse_problem(inst.problem_text, m);
    const OracleResult r = brute_force_fixed_dest(m, p);
    std::optional<double> ted;
    std::optional<double> sweep;
    try {
      ted = solve_fixed_dest(m, p, DestinationRoute::ted_stg).optimal_value;
      sweep = horizon_sweep_fixed_dest(m, p).optimal_value;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::infeasible) throw;
    }
    const std::string tag = "seed " + std::to_string(seed);
    c.require(ted.has_value() == r.optimal_value.has_value(), tag + ": feasibility differs");
    c.require(ted.has_value() == sweep.has_value(), tag + ": horizon sweep feasibility differs");
    if (ted && r.optimal_value && sweep) {
      c.require(same(*ted, *r.optimal_value), tag + ": TED-STG differs from enumeration");
      c.require(same(*sweep, *r.optimal_value), tag + ": horizon sweep differs from enumeration");
    }
    feasible += ted ? 1 : 0;
  }
  if (c.ok) c.detail = "100 instances, " + std::to_string(feasible) + " feasible";
  return c;
}

bool direct_eval(const BoolExpr& e, const std::map<std::string, bool>& env) {
  switch (e.kind()) {
    case BoolExpr::Kind::var:
      return env.at(e.name());
    case BoolExpr::Kind::negation:
      return !direct_eval(e.operands()[0], env);
    case BoolExpr::Kind::conjunction:
      return direct_eval(e.operands()[0], env) && direct_eval(e.operands()[1], env);
    case BoolExpr::Kind::disjunction:
      return direct_eval(e.operands()[0], env) || direct_eval(e.operands()[1], env);
    case BoolExpr::Kind::exclusive_or:
      return direct_eval(e.operands()[0], env) != direct_eval(e.operands()[1], env);
  }
  return false;
}

BoolExpr random_expr(std::mt19937_64& rng, const std::vector<std::string>& vars, int depth) {
  const auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  if (depth == 0 || pick(4) == 0) return BoolExpr::variable(vars[pick(vars.size())]);
  switch (pick(4)) {
    case 0:
      return BoolExpr::negation(random_expr(rng, vars, depth - 1));
    case 1:
      return BoolExpr::conjunction(random_expr(rng, vars, depth - 1), random_expr(rng, vars, depth - 1));
    case 2:
      return BoolExpr::disjunction(random_expr(rng, vars, depth - 1), random_expr(rng, vars, depth - 1));
    default:
      return BoolExpr::exclusive_or(random_expr(rng, vars, depth - 1), random_expr(rng, vars, depth - 1));
  }
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<double>(static_cast<int>(rng() % 7) - 3);
  }
  return m;
}

Check criterion8() {
  Check c;
  std::mt19937_64 rng(8);
  std::size_t cases = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = [&] { return static_cast<std::size_t>(1 + rng() % 4); };
    const Matrix a = random_matrix(rng, d(), d());
    const Matrix b = random_matrix(rng, d(), d());
    const Matrix m = random_matrix(rng, d(), d());
    c.require(stp(stp(a, b), m) == stp(a, stp(b, m)), "associativity, trial " + std::to_string(trial));
    ++cases;
  }
  for (std::uint32_t p = 1; p <= 16; ++p) {
    for (std::uint32_t q = 1; q <= 16; ++q) {
      for (std::uint32_t i = 1; i <= p; ++i) {
        for (std::uint32_t j = 1; j <= q; ++j) {
          const Matrix dense = stp(LogicalMatrix::delta(p, i).to_dense(), LogicalMatrix::delta(q, j).to_dense());
          c.require(dense == LogicalMatrix::delta(p * q, stp_index(i, q, j)).to_dense(),
                    "index law p=" + std::to_string(p) + " q=" + std::to_string(q));
          ++cases;
        }
      }
    }
  }
  for (std::size_t total = 1; total <= 12; ++total) {
    for (std::size_t n = 1; n <= total; ++n) {
      const std::size_t mvars = total - n;
      std::vector<std::string> xs;
      std::vector<std::string> us;
      for (std::size_t j = 1; j <= n; ++j) xs.push_back("x" + std::to_string(j));
      for (std::size_t j = 1; j <= mvars; ++j) us.push_back("u" + std::to_string(j));
      std::vector<std::string> all = us;
      all.insert(all.end(), xs.begin(), xs.end());
      std::vector<BoolExpr> updates;
      for (std::size_t j = 0; j < n; ++j) updates.push_back(random_expr(rng, all, 4));
      const NetworkModel model(xs, us, updates);
      for (std::size_t j = 0; j < n; ++j) {
        const StructureMatrix sm = structure_matrix(updates[j], all);
        for (std::uint32_t col = 1; col <= sm.cols(); ++col) {
          const auto bits = index_to_state(col, all.size());
          std::map<std::string, bool> env;
          for (std::size_t v = 0; v < all.size(); ++v) env[all[v]] = bits[v];
          c.require(sm.column(col) == (direct_eval(updates[j], env) ? 1U : 2U),
                    "structure matrix n+m=" + std::to_string(total));
          ++cases;
        }
      }
      for (InputIndex k = 1; k <= model.input_count(); ++k) {
        const auto ubits = index_to_input(k, mvars);
        for (StateIndex i = 1; i <= model.state_count(); ++i) {
          const auto xbits = index_to_state(i, n);
          std::map<std::string, bool> env;
          for (std::size_t v = 0; v < mvars; ++v) env[us[v]] = ubits[v];
          for (std::size_t v = 0; v < n; ++v) env[xs[v]] = xbits[v];
          std::vector<bool> next(n);
          for (std::size_t v = 0; v < n; ++v) next[v] = direct_eval(updates[v], env);
          c.require(model.step(i, k) == state_to_index(next), "transition matrix n=" + std::to_string(n) +
                                                                  " m=" + std::to_string(mvars));
          ++cases;
        }
      }
    }
  }
  if (c.ok) c.detail = std::to_string(cases) + " cases";
  return c;
}

Check criterion9() {
  Check c;
  const std::vector<std::pair<std::string, std::string>> golden{
      {"three_gene/network.bcn", "three_gene/fixed_time.prob"},
      {"three_gene/network.bcn", "three_gene/stg_plus.prob"},
      {"three_gene/network.bcn", "three_gene/ted_stg.prob"},
      {"ara/network.bcn", "ara/min_energy.prob"},
      {"ara/network.bcn", "ara/min_time.prob"},
  };
  for (const auto& [net, prob] : golden) {
    std::string first;
    for (int repeat = 0; repeat < 3; ++repeat) {
      std::ostringstream out;
      std::ostringstream err;
      const int code =
          cli::run({"solve", "--net", testing::asset(net), "--problem", testing::asset(prob)}, out, err);
      c.require(code == cli::kExitSolved, prob + ": exit code " + std::to_string(code));
      if (repeat == 0) {
        first = out.str();
      } else {
        c.require(out.str() == first, prob + ": output differs between runs");
      }
    }
  }
  if (c.ok) c.detail = "5 golden reports, 3 runs each";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
      {"fixed-time golden example", criterion1},
      {"STG+ golden example", criterion2},
      {"TED-STG golden example", criterion3},
      {"arabinose operon task 1", criterion4},
      {"arabinose operon task 2", criterion5},
      {"fixed-time oracle equivalence", criterion6},
      {"fixed-destination oracle equivalence", criterion7},
      {"STP algebra properties", criterion8},
      {"deterministic reports", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << c.detail << ")\n";
    failures += c.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
