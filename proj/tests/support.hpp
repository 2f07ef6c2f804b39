#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "bcnfoc/model.hpp"

#ifndef BCNFOC_BENCHMARK_DIR
#define BCNFOC_BENCHMARK_DIR "benchmarks"
#endif

namespace testing {

inline std::string asset(const std::string& relative) { return std::string(BCNFOC_BENCHMARK_DIR) + "/" + relative; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline bcnfoc::NetworkModel load_model(const std::string& relative) {
  return bcnfoc::parse_network(slurp(asset(relative)));
}

inline bcnfoc::ProblemSpec load_spec(const std::string& relative, const bcnfoc::NetworkModel& model) {
  return bcnfoc::parse_problem(slurp(asset(relative)), model);
}

inline const char* const kThreeGeneConstraints =
    "forbid states = s8\n"
    "allow inputs = u1, u3, u4\n"
    "allow inputs at s6 = u3, u4\n";

}  // namespace testing
