#include "bcnfoc/stp.hpp"

#include <numeric>
#include <utility>

#include "bcnfoc/bool_expr.hpp"
#include "bcnfoc/errors.hpp"

namespace bcnfoc {

Matrix::Matrix(std::size_t rows, std::size_t cols) : Matrix(rows, cols, std::vector<double>(rows * cols)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorKind::index_out_of_range, "matrix dimensions must be positive");
  }
  if (data_.size() != rows * cols) {
    throw Error(ErrorKind::index_out_of_range, "matrix data length does not match rows x cols");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
      }
    }
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::index_out_of_range, "matrix product with mismatched dimensions");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix stp(const Matrix& a, const Matrix& b) {
  const std::size_t s = std::lcm(a.cols(), b.rows());
  return multiply(kron(a, Matrix::identity(s / a.cols())), kron(b, Matrix::identity(s / b.rows())));
}

LogicalMatrix::LogicalMatrix(std::size_t rows, std::vector<std::uint32_t> col_index)
    : rows_(rows), col_index_(std::move(col_index)) {
  if (rows_ == 0 || col_index_.empty()) {
    throw Error(ErrorKind::index_out_of_range, "logical matrix dimensions must be positive");
  }
  for (auto c : col_index_) {
    if (c < 1 || c > rows_) {
      throw Error(ErrorKind::index_out_of_range,
                  "logical matrix column index " + std::to_string(c) + " outside [1, " +
                      std::to_string(rows_) + "]");
    }
  }
}

LogicalMatrix LogicalMatrix::delta(std::size_t n, std::uint32_t i) { return LogicalMatrix(n, {i}); }

Matrix LogicalMatrix::to_dense() const {
  Matrix m(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j) m(col_index_[j] - 1, j) = 1.0;
  return m;
}

std::uint32_t stp_index(std::uint32_t i, std::uint32_t q, std::uint32_t j) { return (i - 1) * q + j; }

StructureMatrix structure_matrix(const BoolExpr& expr, std::span<const std::string> arg_order) {
  const std::size_t k = arg_order.size();
  if (k > kMaxAssrVariables) {
    throw Error(ErrorKind::too_large, "structure matrix with more than " +
                                          std::to_string(kMaxAssrVariables) + " arguments");
  }
  // compile() numbers arguments by position; the STP column order wants
  // argument 1 in the most significant bit, so positions are reversed.
  std::vector<std::string> reversed(arg_order.rbegin(), arg_order.rend());
  const auto program = CompiledExpr::compile(expr, reversed);
  const std::uint64_t cols = std::uint64_t{1} << k;
  const std::uint64_t mask = cols - 1;
  std::vector<std::uint32_t> col_index(cols);
  for (std::uint64_t c = 0; c < cols; ++c) {
    // Column c + 1 assigns TRUE to argument p iff bit (k-1-p) of c is 0.
    col_index[c] = program.evaluate(~c & mask) ? 1 : 2;
  }
  return LogicalMatrix(2, std::move(col_index));
}

TransitionMatrix::TransitionMatrix(std::size_t state_vars, std::size_t input_vars, LogicalMatrix l)
    : n_(state_vars), m_(input_vars), l_(std::move(l)) {
  if (n_ == 0) throw Error(ErrorKind::index_out_of_range, "a network needs at least one state");
  if (l_.rows() != state_count() || l_.cols() != state_count() * input_count()) {
    throw Error(ErrorKind::index_out_of_range, "transition matrix must be N x MN");
  }
}

StateIndex TransitionMatrix::step(StateIndex state, InputIndex input) const {
  if (state < 1 || state > state_count()) {
    throw Error(ErrorKind::index_out_of_range, "state index " + std::to_string(state) +
                                                   " outside [1, " + std::to_string(state_count()) + "]");
  }
  if (input < 1 || input > input_count()) {
    throw Error(ErrorKind::index_out_of_range, "input index " + std::to_string(input) +
                                                   " outside [1, " + std::to_string(input_count()) + "]");
  }
  return l_.column((input - 1) * state_count() + state);
}

TransitionMatrix build_transition_matrix(std::span<const std::string> state_names,
                                         std::span<const std::string> input_names,
                                         std::span<const BoolExpr> updates) {
  const std::size_t n = state_names.size();
  const std::size_t m = input_names.size();
  if (n + m > kMaxAssrVariables) {
    throw Error(ErrorKind::too_large, "networks are limited to " +
                                          std::to_string(kMaxAssrVariables) + " variables in total");
  }
  if (updates.size() != n) {
    throw Error(ErrorKind::missing_rule, "expected one update rule per state variable");
  }
  std::vector<std::string> args(input_names.begin(), input_names.end());
  args.insert(args.end(), state_names.begin(), state_names.end());

  const std::size_t cols = (std::size_t{1} << n) << m;
  std::vector<std::uint32_t> l(cols, 1);
  for (std::size_t v = 0; v < n; ++v) {
    const StructureMatrix mf = structure_matrix(updates[v], args);
    // Col_j(L) = Col_j(M_f1) ⋉ ... ⋉ Col_j(M_fn), folded left to right.
    const auto index = mf.col_index();
    for (std::size_t j = 0; j < cols; ++j) {
      l[j] = v == 0 ? index[j] : stp_index(l[j], 2, index[j]);
    }
  }
  return TransitionMatrix(n, m, LogicalMatrix(std::size_t{1} << n, std::move(l)));
}

std::uint32_t state_to_index(const std::vector<bool>& bits) {
  if (bits.size() > 31) throw Error(ErrorKind::index_out_of_range, "too many variables");
  std::uint32_t index = 1;
  const std::size_t n = bits.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (!bits[j]) index += std::uint32_t{1} << (n - 1 - j);
  }
  return index;
}

std::vector<bool> index_to_state(std::uint32_t index, std::size_t n) {
  if (n > 31 || index < 1 || index > (std::uint64_t{1} << n)) {
    throw Error(ErrorKind::index_out_of_range,
                "index " + std::to_string(index) + " outside [1, 2^" + std::to_string(n) + "]");
  }
  std::vector<bool> bits(n);
  for (std::size_t j = 1; j <= n; ++j) bits[j - 1] = variable_value(index, n, j);
  return bits;
}

std::string to_bit_literal(std::uint32_t index, std::size_t n) {
  const auto bits = index_to_state(index, n);
  std::string out;
  out.reserve(n);
  for (bool b : bits) out.push_back(b ? 'T' : 'F');
  return out;
}

std::uint32_t from_bit_literal(std::string_view literal) {
  std::vector<bool> bits;
  bits.reserve(literal.size());
  for (char c : literal) {
    if (c != 'T' && c != 'F') {
      throw Error(ErrorKind::index_out_of_range, "bit literal may contain only T and F");
    }
    bits.push_back(c == 'T');
  }
  return state_to_index(bits);
}

}  // namespace bcnfoc
