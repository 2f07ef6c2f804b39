#include <random>

#include "bcnfoc/bool_expr.hpp"
#include "bcnfoc/errors.hpp"
#include "doctest.h"

using namespace bcnfoc;

namespace {

using E = BoolExpr;

/// Straightforward tree walk used as the reference semantics.
bool reference(const BoolExpr& e, const std::vector<std::string>& names, std::uint64_t assignment) {
  switch (e.kind()) {
    case E::Kind::var: {
      const auto pos = std::find(names.begin(), names.end(), e.name()) - names.begin();
      return (assignment >> pos) & 1U;
    }
    case E::Kind::negation: return !reference(e.operands()[0], names, assignment);
    case E::Kind::conjunction:
      return reference(e.operands()[0], names, assignment) && reference(e.operands()[1], names, assignment);
    case E::Kind::disjunction:
      return reference(e.operands()[0], names, assignment) || reference(e.operands()[1], names, assignment);
    case E::Kind::exclusive_or:
      return reference(e.operands()[0], names, assignment) != reference(e.operands()[1], names, assignment);
  }
  return false;
}

BoolExpr random_expr(std::mt19937& rng, const std::vector<std::string>& names, int depth) {
  std::uniform_int_distribution<int> op(0, depth >= 4 ? 0 : 4);
  std::uniform_int_distribution<std::size_t> var(0, names.size() - 1);
  switch (op(rng)) {
    case 0: return E::variable(names[var(rng)]);
    case 1: return E::negation(random_expr(rng, names, depth + 1));
    case 2: return E::conjunction(random_expr(rng, names, depth + 1), random_expr(rng, names, depth + 1));
    case 3: return E::disjunction(random_expr(rng, names, depth + 1), random_expr(rng, names, depth + 1));
    default: return E::exclusive_or(random_expr(rng, names, depth + 1), random_expr(rng, names, depth + 1));
  }
}

}  // namespace

TEST_CASE("operator precedence: not > and > xor > or") {
  const auto a = E::variable("a");
  const auto b = E::variable("b");
  const auto c = E::variable("c");
  CHECK(parse_bool_expr("a | b & c") == E::disjunction(a, E::conjunction(b, c)));
  CHECK(parse_bool_expr("!a & b") == E::conjunction(E::negation(a), b));
  CHECK(parse_bool_expr("a ^ b | c") == E::disjunction(E::exclusive_or(a, b), c));
  CHECK(parse_bool_expr("a & b ^ c") == E::exclusive_or(E::conjunction(a, b), c));
  CHECK(parse_bool_expr("a | b ^ c") == E::disjunction(a, E::exclusive_or(b, c)));
  CHECK(parse_bool_expr("(a | b) & c") == E::conjunction(E::disjunction(a, b), c));
}

TEST_CASE("binary operators are left-associative") {
  const auto a = E::variable("a");
  const auto b = E::variable("b");
  const auto c = E::variable("c");
  CHECK(parse_bool_expr("a ^ b ^ c") == E::exclusive_or(E::exclusive_or(a, b), c));
  CHECK(parse_bool_expr("a&b&c") == E::conjunction(E::conjunction(a, b), c));
}

TEST_CASE("rendering round-trips through the parser") {
  std::mt19937 rng(11);
  const std::vector<std::string> names{"x1", "x2", "u1"};
  for (int trial = 0; trial < 300; ++trial) {
    const BoolExpr e = random_expr(rng, names, 0);
    CHECK(parse_bool_expr(to_string(e)) == e);
  }
  CHECK(to_string(parse_bool_expr("a & (b | c)")) == "a & (b | c)");
  CHECK(to_string(parse_bool_expr("(a & b) | c")) == "a & b | c");
  CHECK(to_string(parse_bool_expr("a ^ (b ^ c)")) == "a ^ (b ^ c)");
}

TEST_CASE("compiled evaluation matches the reference on all assignments") {
  std::mt19937 rng(12);
  const std::vector<std::string> names{"p", "q", "r", "s"};
  for (int trial = 0; trial < 200; ++trial) {
    const BoolExpr e = random_expr(rng, names, 0);
    const CompiledExpr f = CompiledExpr::compile(e, names);
    for (std::uint64_t a = 0; a < 16; ++a) CHECK(f.evaluate(a) == reference(e, names, a));
  }
}

TEST_CASE("parse errors carry positions") {
  auto column_of = [](const char* text) {
    try {
      parse_bool_expr(text, {3, 10});
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 3);
      CHECK(e.kind() == ErrorKind::syntax);
      return e.column();
    }
    FAIL("no syntax error for " << text);
    return 0;
  };
  CHECK(column_of("a $ b") == 12);
  CHECK(column_of("a & ") == 14);
  CHECK(column_of("(a") == 12);
  CHECK(column_of("") == 10);
  CHECK(column_of("a b") == 12);
}

TEST_CASE("free variables and unknown names") {
  const BoolExpr e = parse_bool_expr("x2 & (u1 ^ x3)");
  CHECK(e.variables() == std::set<std::string>{"u1", "x2", "x3"});
  const std::vector<std::string> args{"x2", "x3"};
  try {
    CompiledExpr::compile(e, args);
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::unknown_variable);
  }
}
