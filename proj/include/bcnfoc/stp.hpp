#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcnfoc/types.hpp"

namespace bcnfoc {

class BoolExpr;

/// Dense real matrix, row-major. Only used to check STP algebra on small
/// sizes; the solvers work on LogicalMatrix.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const double> data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix multiply(const Matrix& a, const Matrix& b);

/// Semi-tensor product (A ⊗ I_{s/n})(B ⊗ I_{s/p}) with s = lcm(cols(A), rows(B)).
Matrix stp(const Matrix& a, const Matrix& b);

/// Matrix whose columns are all of the form delta_rows^i, stored as the
/// 1-based row index of the single 1 in each column.
class LogicalMatrix {
 public:
  LogicalMatrix(std::size_t rows, std::vector<std::uint32_t> col_index);

  /// The column vector delta_n^i.
  static LogicalMatrix delta(std::size_t n, std::uint32_t i);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return col_index_.size(); }
  std::span<const std::uint32_t> col_index() const noexcept { return col_index_; }
  /// 1-based column access.
  std::uint32_t column(std::size_t j) const { return col_index_[j - 1]; }

  Matrix to_dense() const;

  friend bool operator==(const LogicalMatrix&, const LogicalMatrix&) = default;

 private:
  std::size_t rows_;
  std::vector<std::uint32_t> col_index_;
};

/// STP of two logical column vectors: delta_p^i ⋉ delta_q^j = delta_pq^{(i-1)q+j}.
std::uint32_t stp_index(std::uint32_t i, std::uint32_t q, std::uint32_t j);

/// A 2 x 2^k logical matrix M_f with f(a_1..a_k) = M_f a_1 ... a_k.
using StructureMatrix = LogicalMatrix;

StructureMatrix structure_matrix(const BoolExpr& expr, std::span<const std::string> arg_order);

/// The ASSR transition matrix L of x(t+1) = L u(t) x(t), L in L_{N x MN}.
class TransitionMatrix {
 public:
  TransitionMatrix(std::size_t state_vars, std::size_t input_vars, LogicalMatrix l);

  std::size_t state_vars() const noexcept { return n_; }
  std::size_t input_vars() const noexcept { return m_; }
  std::size_t state_count() const noexcept { return std::size_t{1} << n_; }
  std::size_t input_count() const noexcept { return std::size_t{1} << m_; }
  const LogicalMatrix& matrix() const noexcept { return l_; }

  /// Col_state(Blk_input(L)).
  StateIndex step(StateIndex state, InputIndex input) const;

 private:
  std::size_t n_;
  std::size_t m_;
  LogicalMatrix l_;
};

/// Largest n + m for which an explicit L is built.
inline constexpr std::size_t kMaxAssrVariables = 24;

/// Builds L column by column as the STP of the per-variable structure-matrix
/// columns, with argument order (u_1..u_m, x_1..x_n).
TransitionMatrix build_transition_matrix(std::span<const std::string> state_names,
                                         std::span<const std::string> input_names,
                                         std::span<const BoolExpr> updates);

// Index <-> Boolean assignment, TRUE ~ delta_2^1 and variable 1 outermost:
// index = 1 + sum_j (1 - b_j) 2^{n-j}.
std::uint32_t state_to_index(const std::vector<bool>& bits);
std::vector<bool> index_to_state(std::uint32_t index, std::size_t n);
inline std::uint32_t input_to_index(const std::vector<bool>& bits) { return state_to_index(bits); }
inline std::vector<bool> index_to_input(std::uint32_t index, std::size_t m) {
  return index_to_state(index, m);
}

/// Value of variable `var` (1-based) in assignment `index` over `n` variables.
inline bool variable_value(std::uint32_t index, std::size_t n, std::size_t var) {
  return (((index - 1) >> (n - var)) & 1U) == 0;
}

/// "TFT"-style rendering of an index; empty string when n = 0.
std::string to_bit_literal(std::uint32_t index, std::size_t n);
/// Inverse of to_bit_literal; throws on characters other than T/F.
std::uint32_t from_bit_literal(std::string_view literal);

}  // namespace bcnfoc
