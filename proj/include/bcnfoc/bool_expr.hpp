#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcnfoc/types.hpp"

namespace bcnfoc {

/// Boolean update expression over named variables.
///
/// Concrete syntax: `!` (not), `&` (and), `^` (xor), `|` (or), binding in
/// that order from tightest to loosest, all binary operators left-associative.
class BoolExpr {
 public:
  enum class Kind { var, negation, conjunction, disjunction, exclusive_or };

  static BoolExpr variable(std::string name);
  static BoolExpr negation(BoolExpr operand);
  static BoolExpr conjunction(BoolExpr lhs, BoolExpr rhs);
  static BoolExpr disjunction(BoolExpr lhs, BoolExpr rhs);
  static BoolExpr exclusive_or(BoolExpr lhs, BoolExpr rhs);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<BoolExpr>& operands() const noexcept { return operands_; }

  std::set<std::string> variables() const;

  friend bool operator==(const BoolExpr&, const BoolExpr&) = default;

 private:
  BoolExpr(Kind kind, std::string name, std::vector<BoolExpr> operands);

  Kind kind_;
  std::string name_;
  std::vector<BoolExpr> operands_;
};

/// Parses one expression. `origin` shifts reported error positions so that
/// errors point into the enclosing file.
BoolExpr parse_bool_expr(std::string_view text, TextOrigin origin = {});

/// Renders with the fewest parentheses that preserve the tree.
std::string to_string(const BoolExpr& expr);

/// An expression with variables resolved to argument positions, evaluated as
/// a postfix program. Assignment bit p (counting from the least significant
/// bit) holds the value of argument p.
class CompiledExpr {
 public:
  /// Throws Error(unknown_variable) when a name is missing from arg_order.
  static CompiledExpr compile(const BoolExpr& expr, std::span<const std::string> arg_order);

  bool evaluate(std::uint64_t assignment) const;

 private:
  enum class Op : std::uint8_t { load, negate, conj, disj, xor_ };
  struct Instr {
    Op op;
    std::uint32_t arg;
  };

  std::vector<Instr> program_;
  std::size_t max_depth_ = 0;
};

}  // namespace bcnfoc
