#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bcnfoc {

enum class Severity { info, warning, error };

std::string_view to_string(Severity severity);

struct Diagnostic {
  Severity severity;
  std::string code;
  std::string message;
};

inline bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) {
    if (d.severity == Severity::error) return true;
  }
  return false;
}

}  // namespace bcnfoc
