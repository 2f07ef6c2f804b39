#include "bcnfoc/errors.hpp"

#include "bcnfoc/diagnostics.hpp"

namespace bcnfoc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax: return "SyntaxError";
    case ErrorKind::unknown_variable: return "UnknownVariable";
    case ErrorKind::duplicate_rule: return "DuplicateRule";
    case ErrorKind::missing_rule: return "MissingRule";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::inconsistent_kind: return "InconsistentKind";
    case ErrorKind::validation: return "ValidationError";
    case ErrorKind::table_length_mismatch: return "TableLengthMismatch";
    case ErrorKind::ubit_in_terminal_cost: return "UbitInTerminalCost";
    case ErrorKind::empty_control_set: return "EmptyControlSet";
    case ErrorKind::forbidden_source: return "ForbiddenSource";
    case ErrorKind::time_variant_cost: return "TimeVariantCost";
    case ErrorKind::infeasible: return "Infeasible";
    case ErrorKind::assumption_violated: return "AssumptionViolated";
    case ErrorKind::too_large: return "TooLarge";
  }
  return "Error";
}

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::info: return "info";
    case Severity::warning: return "warning";
    case Severity::error: return "error";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

SyntaxError::SyntaxError(int line, int column, const std::string& message)
    : Error(ErrorKind::syntax,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace bcnfoc
