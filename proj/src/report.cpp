#include "bcnfoc/report.hpp"

#include <cmath>

namespace bcnfoc {

namespace {

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 9.0e15) return static_cast<std::int64_t>(v);
  return v;
}

}  // namespace

nlohmann::ordered_json to_json(const RunReport& report, const NetworkModel& model) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(report.kind));
  j["feasible"] = report.feasible;
  if (report.solution) {
    const Solution& s = *report.solution;
    j["optimal_value"] = number(s.optimal_value);
    j["horizon"] = s.controls.size();
    auto controls = nlohmann::ordered_json::array();
    for (InputIndex k : s.controls) {
      controls.push_back({{"index", k}, {"bits", to_bit_literal(k, model.input_vars())}});
    }
    j["controls"] = std::move(controls);
    auto trajectory = nlohmann::ordered_json::array();
    for (StateIndex x : s.trajectory) {
      trajectory.push_back({{"index", x}, {"bits", to_bit_literal(x, model.state_vars())}});
    }
    j["trajectory"] = std::move(trajectory);
  } else {
    j["optimal_value"] = nullptr;
    j["horizon"] = nullptr;
    j["controls"] = nlohmann::ordered_json::array();
    j["trajectory"] = nlohmann::ordered_json::array();
  }
  j["reachable_states"] = report.reachable_states;
  j["graph"] = {{"kind", report.graph}, {"vertices", report.graph_vertices}, {"edges", report.graph_edges}};
  if (report.solve_seconds) j["solve_seconds"] = *report.solve_seconds;
  return j;
}

}  // namespace bcnfoc
