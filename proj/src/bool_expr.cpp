#include "bcnfoc/bool_expr.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "bcnfoc/errors.hpp"

namespace bcnfoc {

BoolExpr::BoolExpr(Kind kind, std::string name, std::vector<BoolExpr> operands)
    : kind_(kind), name_(std::move(name)), operands_(std::move(operands)) {}

BoolExpr BoolExpr::variable(std::string name) { return BoolExpr(Kind::var, std::move(name), {}); }

BoolExpr BoolExpr::negation(BoolExpr operand) {
  std::vector<BoolExpr> ops;
  ops.push_back(std::move(operand));
  return BoolExpr(Kind::negation, {}, std::move(ops));
}

namespace {

std::vector<BoolExpr> pair_of(BoolExpr lhs, BoolExpr rhs) {
  std::vector<BoolExpr> ops;
  ops.reserve(2);
  ops.push_back(std::move(lhs));
  ops.push_back(std::move(rhs));
  return ops;
}

}  // namespace

BoolExpr BoolExpr::conjunction(BoolExpr lhs, BoolExpr rhs) {
  return BoolExpr(Kind::conjunction, {}, pair_of(std::move(lhs), std::move(rhs)));
}

BoolExpr BoolExpr::disjunction(BoolExpr lhs, BoolExpr rhs) {
  return BoolExpr(Kind::disjunction, {}, pair_of(std::move(lhs), std::move(rhs)));
}

BoolExpr BoolExpr::exclusive_or(BoolExpr lhs, BoolExpr rhs) {
  return BoolExpr(Kind::exclusive_or, {}, pair_of(std::move(lhs), std::move(rhs)));
}

std::set<std::string> BoolExpr::variables() const {
  std::set<std::string> out;
  std::vector<const BoolExpr*> stack{this};
  while (!stack.empty()) {
    const BoolExpr* e = stack.back();
    stack.pop_back();
    if (e->kind_ == Kind::var) out.insert(e->name_);
    for (const auto& op : e->operands_) stack.push_back(&op);
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, TextOrigin origin) : text_(text), origin_(origin) {}

  BoolExpr parse() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected an expression");
    BoolExpr e = parse_or();
    skip_space();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(origin_.line, origin_.column + static_cast<int>(pos_), message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BoolExpr parse_or() {
    BoolExpr lhs = parse_xor();
    while (accept('|')) lhs = BoolExpr::disjunction(std::move(lhs), parse_xor());
    return lhs;
  }

  BoolExpr parse_xor() {
    BoolExpr lhs = parse_and();
    while (accept('^')) lhs = BoolExpr::exclusive_or(std::move(lhs), parse_and());
    return lhs;
  }

  BoolExpr parse_and() {
    BoolExpr lhs = parse_unary();
    while (accept('&')) lhs = BoolExpr::conjunction(std::move(lhs), parse_unary());
    return lhs;
  }

  BoolExpr parse_unary() {
    if (accept('!')) return BoolExpr::negation(parse_unary());
    return parse_primary();
  }

  BoolExpr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      BoolExpr inner = parse_or();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return BoolExpr::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  TextOrigin origin_;
  std::size_t pos_ = 0;
};

int precedence(BoolExpr::Kind kind) {
  switch (kind) {
    case BoolExpr::Kind::disjunction: return 1;
    case BoolExpr::Kind::exclusive_or: return 2;
    case BoolExpr::Kind::conjunction: return 3;
    case BoolExpr::Kind::negation: return 4;
    case BoolExpr::Kind::var: return 5;
  }
  return 0;
}

void render(const BoolExpr& e, std::string& out) {
  const auto wrap = [&out](const BoolExpr& child, bool parens) {
    if (parens) out.push_back('(');
    render(child, out);
    if (parens) out.push_back(')');
  };
  switch (e.kind()) {
    case BoolExpr::Kind::var:
      out += e.name();
      return;
    case BoolExpr::Kind::negation:
      out.push_back('!');
      wrap(e.operands()[0], precedence(e.operands()[0].kind()) < precedence(e.kind()));
      return;
    default: {
      const int p = precedence(e.kind());
      const char* op = e.kind() == BoolExpr::Kind::conjunction   ? " & "
                       : e.kind() == BoolExpr::Kind::disjunction ? " | "
                                                                 : " ^ ";
      wrap(e.operands()[0], precedence(e.operands()[0].kind()) < p);
      out += op;
      wrap(e.operands()[1], precedence(e.operands()[1].kind()) <= p);
      return;
    }
  }
}

}  // namespace

BoolExpr parse_bool_expr(std::string_view text, TextOrigin origin) { return Parser(text, origin).parse(); }

std::string to_string(const BoolExpr& expr) {
  std::string out;
  render(expr, out);
  return out;
}

CompiledExpr CompiledExpr::compile(const BoolExpr& expr, std::span<const std::string> arg_order) {
  CompiledExpr out;
  std::size_t depth = 0;
  // Post-order walk with an explicit stack: (node, operands already emitted).
  std::vector<std::pair<const BoolExpr*, bool>> stack{{&expr, false}};
  while (!stack.empty()) {
    auto [node, expanded] = stack.back();
    stack.pop_back();
    if (node->kind() == BoolExpr::Kind::var) {
      const auto it = std::find(arg_order.begin(), arg_order.end(), node->name());
      if (it == arg_order.end()) {
        throw Error(ErrorKind::unknown_variable, "unknown variable '" + node->name() + "'");
      }
      out.program_.push_back({Op::load, static_cast<std::uint32_t>(it - arg_order.begin())});
      out.max_depth_ = std::max(out.max_depth_, ++depth);
      continue;
    }
    if (!expanded) {
      stack.emplace_back(node, true);
      const auto& ops = node->operands();
      for (auto it = ops.rbegin(); it != ops.rend(); ++it) stack.emplace_back(&*it, false);
      continue;
    }
    switch (node->kind()) {
      case BoolExpr::Kind::negation: out.program_.push_back({Op::negate, 0}); break;
      case BoolExpr::Kind::conjunction: out.program_.push_back({Op::conj, 0}); --depth; break;
      case BoolExpr::Kind::disjunction: out.program_.push_back({Op::disj, 0}); --depth; break;
      case BoolExpr::Kind::exclusive_or: out.program_.push_back({Op::xor_, 0}); --depth; break;
      case BoolExpr::Kind::var: break;
    }
  }
  return out;
}

bool CompiledExpr::evaluate(std::uint64_t assignment) const {
  std::vector<bool> stack;
  stack.reserve(max_depth_);
  for (const Instr& ins : program_) {
    switch (ins.op) {
      case Op::load: stack.push_back(((assignment >> ins.arg) & 1U) != 0); break;
      case Op::negate: stack.back() = !stack.back(); break;
      default: {
        const bool rhs = stack.back();
        stack.pop_back();
        const bool lhs = stack.back();
        stack.back() = ins.op == Op::conj ? (lhs && rhs) : ins.op == Op::disj ? (lhs || rhs) : (lhs != rhs);
      }
    }
  }
  return stack.back();
}

}  // namespace bcnfoc
