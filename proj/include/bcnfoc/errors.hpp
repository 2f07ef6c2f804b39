#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcnfoc {

enum class ErrorKind {
  syntax,
  unknown_variable,
  duplicate_rule,
  missing_rule,
  index_out_of_range,
  inconsistent_kind,
  validation,
  table_length_mismatch,
  ubit_in_terminal_cost,
  empty_control_set,
  forbidden_source,
  time_variant_cost,
  infeasible,
  assumption_violated,
  too_large,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error raised by the library. The kind is stable and is what
/// callers (and the CLI exit-code mapping) should switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace bcnfoc
