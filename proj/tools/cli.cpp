#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bcnfoc/dot.hpp"
#include "bcnfoc/errors.hpp"
#include "bcnfoc/fixed_destination.hpp"
#include "bcnfoc/fixed_time.hpp"
#include "bcnfoc/graph.hpp"
#include "bcnfoc/model.hpp"
#include "bcnfoc/oracle.hpp"
#include "bcnfoc/random_instance.hpp"
#include "bcnfoc/report.hpp"
#include "bcnfoc/validate.hpp"

#ifndef BCNFOC_BENCHMARK_DIR
#define BCNFOC_BENCHMARK_DIR "benchmarks"
#endif

namespace bcnfoc::cli {

namespace {

/// An error tied to an input file.
struct FileError {
  std::string path;
  ErrorKind kind;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError{path, ErrorKind::validation, "cannot open file"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError{path, ErrorKind::validation, "cannot write file"};
  out << text;
}

template <typename F>
auto from_file(const std::string& path, F&& f) {
  const std::string text = read_file(path);
  try {
    return f(text);
  } catch (const Error& e) {
    throw FileError{path, e.kind(), e.what()};
  }
}

NetworkModel load_network(const std::string& path) {
  return from_file(path, [](const std::string& text) { return parse_network(text); });
}

ProblemSpec load_problem(const std::string& path, const NetworkModel& model) {
  return from_file(path, [&](const std::string& text) { return parse_problem(text, model); });
}

enum class Route { automatic, stg_plus, ted_stg };

struct Outcome {
  RunReport report;
  std::optional<LayeredGraph> graph;
};

Outcome run_solver(const NetworkModel& model, const ProblemSpec& spec, Route route) {
  Outcome out;
  out.report.kind = spec.kind;
  const Stg stg = build_stg(model, spec.x0, spec.constraints);
  out.report.reachable_states = stg.vertices().size();

  if (spec.kind == ProblemKind::fixed_time) {
    out.graph = build_tet_stg(model, spec);
    out.report.graph = "tet-stg";
    out.report.graph_vertices = out.graph->vertex_count();
    out.report.graph_edges = out.graph->arc_count();
    try {
      out.report.solution = solve_fixed_time(model, spec);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::infeasible) throw;
    }
  } else {
    if (route == Route::automatic) {
      const std::vector<StateIndex> omega(spec.omega.begin(), spec.omega.end());
      const auto z = static_cast<std::int64_t>(stg.vertices().size());
      route = is_time_invariant(spec.stage_cost, spec.terminal_cost, stg.vertices(), omega, z - 1) ? Route::stg_plus
                                                                                                 : Route::ted_stg;
    }
    DestinationGraph dg = route == Route::stg_plus ? build_stg_plus(model, spec) : build_ted_stg(model, spec);
    out.report.graph = route == Route::stg_plus ? "stg+" : "ted-stg";
    out.report.graph_vertices = dg.graph.vertex_count();
    out.report.graph_edges = dg.graph.arc_count();
    out.graph = std::move(dg.graph);
    try {
      out.report.solution = solve_fixed_dest(
          model, spec, route == Route::stg_plus ? DestinationRoute::stg_plus : DestinationRoute::ted_stg);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::infeasible) throw;
    }
  }
  out.report.feasible = out.report.solution.has_value();
  return out;
}

std::uint64_t oracle_limit() {
  if (const char* env = std::getenv("BCNFOC_ORACLE_LIMIT")) {
    std::uint64_t value = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc{} && ptr == s.data() + s.size()) return value;
    throw FileError{"BCNFOC_ORACLE_LIMIT", ErrorKind::validation, "expected a nonnegative integer"};
  }
  return kDefaultEnumerationLimit;
}

bool same_value(const std::optional<double>& a, const std::optional<double>& b) {
  if (!a || !b) return !a && !b;
  return std::fabs(*a - *b) <= 1e-9;
}

std::string show(const std::optional<double>& v) {
  if (!v) return "infeasible";
  std::ostringstream s;
  s << *v;
  return s.str();
}

/// Empty when the solver(s) and the oracle agree, otherwise a description.
std::string verify_instance(const NetworkModel& model, const ProblemSpec& spec, std::uint64_t limit) {
  if (spec.kind == ProblemKind::fixed_time) {
    const OracleResult oracle = brute_force_fixed_time(model, spec, limit);
    std::optional<double> solver;
    std::optional<double> replay;
    try {
      const Solution s = solve_fixed_time(model, spec);
      solver = s.optimal_value;
      replay = evaluate_controls(model, spec, s.controls);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::infeasible) throw;
    }
    if (!same_value(solver, oracle.optimal_value)) {
      return "solver " + show(solver) + " vs oracle " + show(oracle.optimal_value);
    }
    if (!same_value(solver, replay)) return "solver witness replays to " + show(replay);
    return {};
  }

  const OracleResult oracle = brute_force_fixed_dest(model, spec, limit);
  std::optional<double> ted;
  std::optional<double> replay;
  std::optional<double> procedure;
  try {
    const Solution s = solve_fixed_dest(model, spec, DestinationRoute::ted_stg);
    ted = s.optimal_value;
    replay = evaluate_controls(model, spec, s.controls);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::infeasible) throw;
  }
  try {
    procedure = horizon_sweep_fixed_dest(model, spec).optimal_value;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::infeasible) throw;
  }
  if (!same_value(ted, oracle.optimal_value) || !same_value(procedure, oracle.optimal_value)) {
    return "time-expanded " + show(ted) + ", per-horizon " + show(procedure) + " vs oracle " +
           show(oracle.optimal_value);
  }
  if (!same_value(ted, replay)) return "solver witness replays to " + show(replay);
  return {};
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw FileError{"--seeds", ErrorKind::syntax, "expected A..B or a single seed, got '" + text + "'"};
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = number(text);
    return {v, v};
  }
  const auto lo = number(std::string_view(text).substr(0, dots));
  const auto hi = number(std::string_view(text).substr(dots + 2));
  if (hi < lo) throw FileError{"--seeds", ErrorKind::syntax, "empty seed range"};
  return {lo, hi};
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::infeasible: return kExitInfeasible;
    case ErrorKind::too_large: return kExitTooLarge;
    default: return kExitInputError;
  }
}

struct BenchCase {
  std::string name;
  std::string network;
  std::string problem;
  double expected_value;
  std::optional<std::size_t> expected_reachable;
  std::vector<StateIndex> expected_trajectory;
};

int run_bench(const std::string& suite, const std::string& data, std::ostream& out, std::ostream& err) {
  std::vector<BenchCase> cases;
  if (suite == "ara") {
    cases = {
        {"min_energy", "ara/network.bcn", "ara/min_energy.prob", 1108, 108, {}},
        {"min_time", "ara/network.bcn", "ara/min_time.prob", 3, 108, {9, 41, 15, 410}},
    };
  } else if (suite == "three-gene") {
    cases = {
        {"fixed_time", "three_gene/network.bcn", "three_gene/fixed_time.prob", 11, 7, {}},
        {"stg_plus", "three_gene/network.bcn", "three_gene/stg_plus.prob", 13, std::nullopt, {}},
        {"ted_stg", "three_gene/network.bcn", "three_gene/ted_stg.prob", 14, 7, {}},
    };
  } else {
    err << "error: unknown suite '" << suite << "' (expected ara or three-gene)\n";
    return kExitInputError;
  }

  out << std::left << std::setw(22) << "case" << std::setw(10) << "value" << std::setw(10) << "expected"
      << std::setw(8) << "steps" << std::setw(11) << "reachable" << "seconds\n";
  int failures = 0;
  for (const BenchCase& c : cases) {
    const auto start = std::chrono::steady_clock::now();
    const NetworkModel model = load_network(data + "/" + c.network);
    const ProblemSpec spec = load_problem(data + "/" + c.problem, model);
    const Solution s =
        spec.kind == ProblemKind::fixed_time ? solve_fixed_time(model, spec) : solve_fixed_dest(model, spec);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    out << std::setw(22) << c.name << std::setw(10) << s.optimal_value << std::setw(10) << c.expected_value
        << std::setw(8) << s.controls.size() << std::setw(11) << s.stats.reachable_states << std::fixed
        << std::setprecision(4) << seconds << std::defaultfloat << std::setprecision(6) << "\n";

    if (s.optimal_value != c.expected_value) {
      err << "FAILED " << c.name << ": optimal value " << s.optimal_value << ", expected " << c.expected_value << "\n";
      ++failures;
    }
    if (c.expected_reachable && s.stats.reachable_states != *c.expected_reachable) {
      err << "FAILED " << c.name << ": reachable set " << s.stats.reachable_states << ", expected "
          << *c.expected_reachable << "\n";
      ++failures;
    }
    if (!c.expected_trajectory.empty() && s.trajectory != c.expected_trajectory) {
      err << "FAILED " << c.name << ": trajectory differs from the reference\n";
      ++failures;
    }
  }
  return failures == 0 ? kExitSolved : kExitInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-horizon optimal control of Boolean control networks", "bcnfoc"};
  app.require_subcommand(1);

  std::string net;
  std::string problem;
  std::string out_path;
  std::string dot_path;
  std::string route_name = "auto";
  bool timing = false;
  auto* solve = app.add_subcommand("solve", "Solve a fixed-time or fixed-destination problem");
  solve->add_option("--net", net, "Network file")->required();
  solve->add_option("--problem", problem, "Problem file")->required();
  solve->add_option("--out", out_path, "Also write the JSON report to this file");
  solve->add_option("--dot", dot_path, "Write the solver graph with the optimal path highlighted");
  solve->add_option("--route", route_name, "Fixed-destination graph: auto, stg-plus or ted-stg")
      ->check(CLI::IsMember({"auto", "stg-plus", "ted-stg"}));
  solve->add_flag("--timing", timing, "Include wall-clock solve time in the report");

  std::string from;
  std::string constraints_path;
  std::optional<std::size_t> depth;
  auto* reach = app.add_subcommand("reach", "Reachable set and per-step layers from a state");
  reach->add_option("--net", net, "Network file")->required();
  reach->add_option("--from", from, "Initial state (sK or bit literal)")->required();
  reach->add_option("--constraints", constraints_path, "File with forbid/allow lines");
  reach->add_option("--dot", dot_path, "Write the state transition graph");
  reach->add_option("--depth", depth, "Number of layers after the initial one");

  std::string seeds;
  auto* verify = app.add_subcommand("verify", "Compare the solvers with exhaustive enumeration");
  auto* vnet = verify->add_option("--net", net, "Network file");
  auto* vprob = verify->add_option("--problem", problem, "Problem file");
  auto* vseeds = verify->add_option("--seeds", seeds, "Random instances for seeds A..B");
  vnet->needs(vprob);
  vprob->needs(vnet);
  vseeds->excludes(vnet)->excludes(vprob);

  std::string suite;
  std::string data = BCNFOC_BENCHMARK_DIR;
  auto* bench = app.add_subcommand("bench", "Run a bundled benchmark suite");
  bench->add_option("--suite", suite, "ara or three-gene")->required();
  bench->add_option("--data", data, "Benchmark directory");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSolved : kExitInputError;
  }

  try {
    if (*solve) {
      const NetworkModel model = load_network(net);
      const ProblemSpec spec = load_problem(problem, model);
      for (const Diagnostic& d : validate(model, spec)) {
        if (d.severity == Severity::warning) err << "warning: " << d.message << "\n";
      }
      const Route route = route_name == "stg-plus"  ? Route::stg_plus
                          : route_name == "ted-stg" ? Route::ted_stg
                                                    : Route::automatic;
      Outcome outcome = run_solver(model, spec, route);
      if (timing && outcome.report.solution) outcome.report.solve_seconds = outcome.report.solution->stats.solve_seconds;
      const std::string json = to_json(outcome.report, model).dump(2) + "\n";
      out << json;
      if (!out_path.empty()) write_file(out_path, json);
      if (!dot_path.empty()) {
        DotOptions options;
        options.terminal_states = spec.omega;
        if (outcome.report.solution) options.highlight_path = outcome.report.solution->path;
        write_file(dot_path, export_dot(*outcome.graph, options));
      }
      if (!outcome.report.feasible) {
        err << "infeasible: no admissible control sequence reaches the target set\n";
        return kExitInfeasible;
      }
      return kExitSolved;
    }

    if (*reach) {
      const NetworkModel model = load_network(net);
      StateIndex x0 = 0;
      try {
        x0 = parse_state_ref(from, model);
      } catch (const Error& e) {
        throw FileError{"--from", e.kind(), e.what()};
      }
      const Constraints constraints =
          constraints_path.empty()
              ? Constraints::unconstrained(model.input_count())
              : from_file(constraints_path, [&](const std::string& text) { return parse_constraints(text, model); });
      const Stg stg = build_stg(model, x0, constraints);
      const std::size_t d = depth.value_or(stg.vertices().size() - 1);
      const ReachLayers layers = reach_layers(model, x0, constraints, d);
      nlohmann::ordered_json j;
      j["from"] = x0;
      j["reachable_states"] = stg.vertices().size();
      j["edges"] = stg.edge_count();
      auto sizes = nlohmann::ordered_json::array();
      for (const auto& layer : layers.layers) sizes.push_back(layer.size());
      j["layer_sizes"] = std::move(sizes);
      out << j.dump(2) << "\n";
      if (!dot_path.empty()) {
        DotOptions options;
        options.name = "STG";
        options.show_controls = true;
        write_file(dot_path, export_dot(stg, options));
      }
      return kExitSolved;
    }

    if (*verify) {
      const std::uint64_t limit = oracle_limit();
      if (!net.empty()) {
        const NetworkModel model = load_network(net);
        const ProblemSpec spec = load_problem(problem, model);
        const std::string problem_text = verify_instance(model, spec, limit);
        if (!problem_text.empty()) {
          err << "mismatch: " << problem_text << "\n";
          return kExitMismatch;
        }
        out << "agree\n";
        return kExitSolved;
      }
      if (seeds.empty()) {
        err << "error: verify needs --net/--problem or --seeds\n";
        return kExitInputError;
      }
      const auto [lo, hi] = parse_seed_range(seeds);
      std::size_t checked = 0;
      std::size_t mismatches = 0;
      for (std::uint64_t seed = lo; seed <= hi; ++seed) {
        for (ProblemKind kind : {ProblemKind::fixed_time, ProblemKind::fixed_destination}) {
          RandomInstanceOptions options;
          options.kind = kind;
          const RandomInstance inst = random_instance(seed, options);
          const NetworkModel model = parse_network(inst.network_text);
          const ProblemSpec spec = parse_problem(inst.problem_text, model);
          const std::string problem_text = verify_instance(model, spec, limit);
          ++checked;
          if (!problem_text.empty()) {
            ++mismatches;
            err << "seed " << seed << " " << to_string(kind) << ": " << problem_text << "\n";
          }
        }
        if (seed == hi) break;
      }
      out << checked << " instances checked, " << mismatches << " mismatches\n";
      return mismatches == 0 ? kExitSolved : kExitMismatch;
    }

    if (*bench) return run_bench(suite, data, out, err);
  } catch (const FileError& e) {
    err << e.path << ": " << e.message << "\n";
    return exit_code(e.kind);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kExitInputError;
}

}  // namespace bcnfoc::cli
