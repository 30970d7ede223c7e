#pragma once

// Logical matrices and the semi-tensor product (STP).
//
// All indices exposed here are 1-based, matching the delta notation:
// delta_n^i is the i-th column of the n x n identity, and a logical matrix
// delta_n[i_1, ..., i_s] has delta_n^{i_j} as its j-th column.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace recon {

/// Dense integer matrix, row-major. Used only to check the closed-form
/// logical-matrix product against the textbook STP definition.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // 0-based element access.
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  const std::vector<std::int64_t>& entries() const { return data_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b);

/// Ordinary product; throws std::invalid_argument if a.cols() != b.rows().
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

/// A |x| B = (A (x) I_{l/n}) (B (x) I_{l/p}), l = lcm(n, p), where n = a.cols()
/// and p = b.rows().
DenseMatrix stp(const DenseMatrix& a, const DenseMatrix& b);

class LogicalMatrix {
 public:
  /// `col_index[j]` is the 1-based row holding the single 1 of column j+1.
  /// Throws std::invalid_argument if rows == 0 or any entry is outside [1, rows].
  LogicalMatrix(std::size_t rows, std::vector<std::size_t> col_index);

  static LogicalMatrix identity(std::size_t n);
  /// The column vector delta_n^i.
  static LogicalMatrix delta(std::size_t n, std::size_t i);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }

  /// Row index (1-based) of the 1 in column `col` (1-based).
  std::size_t at(std::size_t col) const;

  std::span<const std::size_t> col_index() const { return cols_; }

  DenseMatrix to_dense() const;
  /// Inverse of to_dense; nullopt if `m` is not a logical matrix.
  static std::optional<LogicalMatrix> from_dense(const DenseMatrix& m);

  friend bool operator==(const LogicalMatrix&, const LogicalMatrix&) = default;

 private:
  std::size_t rows_;
  std::vector<std::size_t> cols_;
};

/// A (x) I_k, computed without expansion.
LogicalMatrix kronecker_identity(const LogicalMatrix& a, std::size_t k);

/// STP of two logical matrices via column index arithmetic. The result is
/// again logical; to_dense(stp_logical(a, b)) == stp(to_dense(a), to_dense(b)).
LogicalMatrix stp_logical(const LogicalMatrix& a, const LogicalMatrix& b);

/// Renders as e.g. "delta_5[1,4,3]".
std::string to_string(const LogicalMatrix& m);

// ---------------------------------------------------------------------------
// Boolean <-> vector encoding

/// Encodes (b_1, ..., b_k) as the 1-based index 1 + sum (1 - b_i) 2^{k-i},
/// so all-true maps to 1 and all-false maps to 2^k.
std::size_t encode_bits(const std::vector<bool>& bits);

/// Inverse of encode_bits for vectors of length k.
std::vector<bool> decode_bits(std::size_t k, std::size_t index);

/// Total or partial truth table of a Boolean map D^arity -> D^width.
/// Rows are addressed by their input vector.
class TruthTable {
 public:
  TruthTable(std::size_t arity, std::size_t width);

  template <class F>
  static TruthTable from_function(std::size_t arity, std::size_t width, F&& f) {
    TruthTable t(arity, width);
    for (std::size_t idx = 1; idx <= t.num_rows(); ++idx) {
      auto in = decode_bits(arity, idx);
      t.set(in, f(in));
    }
    return t;
  }

  std::size_t arity() const { return arity_; }
  std::size_t width() const { return width_; }
  std::size_t num_rows() const { return rows_.size(); }

  void set(const std::vector<bool>& input, std::vector<bool> output);
  const std::optional<std::vector<bool>>& get(const std::vector<bool>& input) const;

  /// The first undefined row, if any, in encoding order.
  std::optional<std::vector<bool>> first_missing_row() const;

 private:
  std::size_t arity_;
  std::size_t width_;
  // Indexed by encode_bits(input) - 1.
  std::vector<std::optional<std::vector<bool>>> rows_;
};

struct AlgebraicForm {
  LogicalMatrix transition;  // L, N x NM
  LogicalMatrix output;      // H, Q x N
};

/// Converts x' = f(u, x), y = h(x) into x' = L u x, y = H x.
///
/// `f` has arity m + n (inputs u_1..u_m first, then states x_1..x_n) and
/// width n; `h` has arity n and width q. Because
/// delta_M^j |x| delta_N^i = delta_MN^{(j-1)N+i}, column c of L is the
/// encoded image of f at the concatenated vector decode_bits(m + n, c).
/// m may be 0 (autonomous network, M = 1).
///
/// Throws std::invalid_argument on shape mismatch or if either table is
/// partial; the message names the first missing row.
AlgebraicForm boolean_to_algebraic(const TruthTable& f, const TruthTable& h);

}  // namespace recon
