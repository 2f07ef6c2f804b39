#include <random>

#include "bcnfoc/bool_expr.hpp"
#include "bcnfoc/errors.hpp"
#include "bcnfoc/stp.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bcnfoc;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  }
  return m;
}

}  // namespace

TEST_CASE("stp reduces to the ordinary product when dimensions match") {
  std::mt19937 rng(1);
  const Matrix a = random_matrix(rng, 3, 4);
  const Matrix b = random_matrix(rng, 4, 2);
  CHECK(stp(a, b) == multiply(a, b));
}

TEST_CASE("stp dimensions follow the lcm rule") {
  std::mt19937 rng(2);
  const Matrix a = random_matrix(rng, 2, 4);
  const Matrix b = random_matrix(rng, 2, 3);
  const Matrix c = stp(a, b);
  CHECK(c.rows() == 2 * 1);
  CHECK(c.cols() == 3 * 2);
}

TEST_CASE("stp is associative") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const Matrix a = random_matrix(rng, dim(rng), dim(rng));
    const Matrix b = random_matrix(rng, dim(rng), dim(rng));
    const Matrix c = random_matrix(rng, dim(rng), dim(rng));
    CHECK(stp(stp(a, b), c) == stp(a, stp(b, c)));
  }
}

TEST_CASE("logical vector product index law") {
  for (std::uint32_t p = 1; p <= 8; ++p) {
    for (std::uint32_t q = 1; q <= 8; ++q) {
      for (std::uint32_t i = 1; i <= p; ++i) {
        for (std::uint32_t j = 1; j <= q; ++j) {
          const Matrix dense = stp(LogicalMatrix::delta(p, i).to_dense(), LogicalMatrix::delta(q, j).to_dense());
          CHECK(dense == LogicalMatrix::delta(p * q, stp_index(i, q, j)).to_dense());
        }
      }
    }
  }
}

TEST_CASE("logical matrix validates its columns") {
  CHECK_THROWS_AS(LogicalMatrix(2, {1, 3}), Error);
  CHECK_THROWS_AS(LogicalMatrix(2, {0}), Error);
  const LogicalMatrix m(3, {2, 1});
  CHECK(m.column(1) == 2);
  const Matrix d = m.to_dense();
  CHECK(d(1, 0) == 1.0);
  CHECK(d(0, 1) == 1.0);
  CHECK(d(2, 0) == 0.0);
}

TEST_CASE("structure matrix agrees with direct evaluation") {
  const std::vector<std::string> args{"a", "b", "c", "d"};
  for (const char* text : {"a & b", "!a", "a ^ (b | !c)", "(a | b) & (c ^ d)", "!(a & b) | d"}) {
    const BoolExpr e = parse_bool_expr(text);
    const StructureMatrix m = structure_matrix(e, args);
    REQUIRE(m.cols() == 16);
    const CompiledExpr f = CompiledExpr::compile(e, args);
    for (std::uint32_t col = 1; col <= 16; ++col) {
      // Column col corresponds to the argument assignment index_to_state(col, 4).
      const auto bits = index_to_state(col, 4);
      std::uint64_t assignment = 0;
      for (std::size_t p = 0; p < 4; ++p) {
        if (bits[p]) assignment |= std::uint64_t{1} << p;
      }
      CHECK(m.column(col) == (f.evaluate(assignment) ? 1U : 2U));
    }
  }
}

TEST_CASE("identity dynamics give L = I_2") {
  const NetworkModel m = parse_network("states: x1\nnext x1 = x1\n");
  CHECK(m.transitions().matrix() == LogicalMatrix(2, {1, 2}));
  CHECK(m.input_count() == 1);
}

TEST_CASE("transition matrix of the three-gene example") {
  const NetworkModel m = testing::load_model("three_gene/network.bcn");
  CHECK(m.transitions().matrix().rows() == 8);
  CHECK(m.transitions().matrix().cols() == 32);
  CHECK(m.step(7, 1) == 5);
  CHECK(m.step(1, 1) == 8);
  CHECK(m.step(1, 2) == 7);
  CHECK(m.step(1, 3) == 4);
  CHECK(m.step(1, 4) == 3);
  CHECK_THROWS_AS(m.step(9, 1), Error);
  CHECK_THROWS_AS(m.step(1, 5), Error);
  CHECK_THROWS_AS(m.step(0, 1), Error);
}

TEST_CASE("step matches evaluating the update rules") {
  const NetworkModel m = testing::load_model("three_gene/network.bcn");
  for (StateIndex i = 1; i <= 8; ++i) {
    for (InputIndex k = 1; k <= 4; ++k) {
      const auto x = index_to_state(i, 3);
      const auto u = index_to_input(k, 2);
      const std::vector<bool> next{x[1] && (u[0] != x[2]), !x[0], u[1] != x[1]};
      CHECK(m.step(i, k) == state_to_index(next));
    }
  }
}

TEST_CASE("index conversions") {
  CHECK(state_to_index({true, true, true}) == 1);
  CHECK(state_to_index({false, false, false}) == 8);
  CHECK(state_to_index({true, false, true}) == 3);
  CHECK(to_bit_literal(3, 3) == "TFT");
  CHECK(from_bit_literal("FFT") == 7);
  CHECK(to_bit_literal(1, 0).empty());
  CHECK_THROWS_AS(from_bit_literal("TX"), Error);
  CHECK_THROWS_AS(index_to_state(9, 3), Error);
  for (std::uint32_t i = 1; i <= 64; ++i) CHECK(state_to_index(index_to_state(i, 6)) == i);
}
