#include "recon/stp.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace recon {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("DenseMatrix: dimensions must be positive");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("DenseMatrix: dimensions must be positive");
  if (data_.size() != rows * cols) throw std::invalid_argument("DenseMatrix: entry count != rows * cols");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

DenseMatrix stp(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.cols();
  const std::size_t p = b.rows();
  const std::size_t alpha = std::lcm(n, p);
  if (alpha == n && alpha == p) return multiply(a, b);
  return multiply(kronecker(a, DenseMatrix::identity(alpha / n)), kronecker(b, DenseMatrix::identity(alpha / p)));
}

// ---------------------------------------------------------------------------

LogicalMatrix::LogicalMatrix(std::size_t rows, std::vector<std::size_t> col_index)
    : rows_(rows), cols_(std::move(col_index)) {
  if (rows_ == 0) throw std::invalid_argument("LogicalMatrix: row count must be positive");
  if (cols_.empty()) throw std::invalid_argument("LogicalMatrix: column count must be positive");
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (cols_[j] < 1 || cols_[j] > rows_) {
      std::ostringstream msg;
      msg << "LogicalMatrix: column " << (j + 1) << " has index " << cols_[j] << ", expected 1.." << rows_;
      throw std::invalid_argument(msg.str());
    }
  }
}

LogicalMatrix LogicalMatrix::identity(std::size_t n) {
  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), std::size_t{1});
  return LogicalMatrix(n, std::move(cols));
}

LogicalMatrix LogicalMatrix::delta(std::size_t n, std::size_t i) { return LogicalMatrix(n, {i}); }

std::size_t LogicalMatrix::at(std::size_t col) const {
  if (col < 1 || col > cols_.size()) throw std::out_of_range("LogicalMatrix::at: column out of range");
  return cols_[col - 1];
}

DenseMatrix LogicalMatrix::to_dense() const {
  DenseMatrix m(rows_, cols_.size());
  for (std::size_t j = 0; j < cols_.size(); ++j) m(cols_[j] - 1, j) = 1;
  return m;
}

std::optional<LogicalMatrix> LogicalMatrix::from_dense(const DenseMatrix& m) {
  std::vector<std::size_t> cols(m.cols(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const auto v = m(i, j);
      if (v == 0) continue;
      if (v != 1 || cols[j] != 0) return std::nullopt;
      cols[j] = i + 1;
    }
    if (cols[j] == 0) return std::nullopt;
  }
  return LogicalMatrix(m.rows(), std::move(cols));
}

LogicalMatrix kronecker_identity(const LogicalMatrix& a, std::size_t k) {
  if (k == 1) return a;
  // Column (c-1)k + t of A (x) I_k is delta^{(a_c - 1)k + t}.
  std::vector<std::size_t> cols;
  cols.reserve(a.cols() * k);
  for (auto ac : a.col_index())
    for (std::size_t t = 1; t <= k; ++t) cols.push_back((ac - 1) * k + t);
  return LogicalMatrix(a.rows() * k, std::move(cols));
}

LogicalMatrix stp_logical(const LogicalMatrix& a, const LogicalMatrix& b) {
  const std::size_t alpha = std::lcm(a.cols(), b.rows());
  const auto left = kronecker_identity(a, alpha / a.cols());
  const auto right = kronecker_identity(b, alpha / b.rows());
  // Product of logical matrices composes column selectors.
  std::vector<std::size_t> cols;
  cols.reserve(right.cols());
  for (auto r : right.col_index()) cols.push_back(left.col_index()[r - 1]);
  return LogicalMatrix(left.rows(), std::move(cols));
}

std::string to_string(const LogicalMatrix& m) {
  std::ostringstream out;
  out << "delta_" << m.rows() << '[';
  for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m.col_index()[j];
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------------------

std::size_t encode_bits(const std::vector<bool>& bits) {
  std::size_t idx = 0;
  for (bool b : bits) idx = idx * 2 + (b ? 0 : 1);
  return idx + 1;
}

std::vector<bool> decode_bits(std::size_t k, std::size_t index) {
  if (index < 1 || (k < 64 && index > (std::size_t{1} << k)))
    throw std::out_of_range("decode_bits: index out of range");
  std::vector<bool> bits(k);
  std::size_t rest = index - 1;
  for (std::size_t i = k; i-- > 0;) {
    bits[i] = (rest & 1) == 0;
    rest >>= 1;
  }
  return bits;
}

namespace {

std::string format_bits(const std::vector<bool>& bits) {
  std::string s = "(";
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i) s += ',';
    s += bits[i] ? '1' : '0';
  }
  return s + ")";
}

}  // namespace

TruthTable::TruthTable(std::size_t arity, std::size_t width) : arity_(arity), width_(width) {
  if (arity >= 30) throw std::invalid_argument("TruthTable: arity too large");
  rows_.resize(std::size_t{1} << arity);
}

void TruthTable::set(const std::vector<bool>& input, std::vector<bool> output) {
  if (input.size() != arity_) throw std::invalid_argument("TruthTable::set: input has wrong arity");
  if (output.size() != width_) throw std::invalid_argument("TruthTable::set: output has wrong width");
  rows_[encode_bits(input) - 1] = std::move(output);
}

const std::optional<std::vector<bool>>& TruthTable::get(const std::vector<bool>& input) const {
  if (input.size() != arity_) throw std::invalid_argument("TruthTable::get: input has wrong arity");
  return rows_[encode_bits(input) - 1];
}

std::optional<std::vector<bool>> TruthTable::first_missing_row() const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (!rows_[i]) return decode_bits(arity_, i + 1);
  return std::nullopt;
}

AlgebraicForm boolean_to_algebraic(const TruthTable& f, const TruthTable& h) {
  const std::size_t n = h.arity();
  if (f.width() != n) throw std::invalid_argument("boolean_to_algebraic: f width must equal h arity");
  if (f.arity() < n) throw std::invalid_argument("boolean_to_algebraic: f arity smaller than state count");
  if (n == 0) throw std::invalid_argument("boolean_to_algebraic: at least one state variable required");
  if (auto missing = f.first_missing_row())
    throw std::invalid_argument("boolean_to_algebraic: f has no row for " + format_bits(*missing));
  if (auto missing = h.first_missing_row())
    throw std::invalid_argument("boolean_to_algebraic: h has no row for " + format_bits(*missing));

  const std::size_t N = std::size_t{1} << n;
  const std::size_t Q = std::size_t{1} << h.width();

  std::vector<std::size_t> l_cols;
  l_cols.reserve(f.num_rows());
  for (std::size_t c = 1; c <= f.num_rows(); ++c) l_cols.push_back(encode_bits(*f.get(decode_bits(f.arity(), c))));

  std::vector<std::size_t> h_cols;
  h_cols.reserve(N);
  for (std::size_t c = 1; c <= N; ++c) h_cols.push_back(encode_bits(*h.get(decode_bits(n, c))));

  return AlgebraicForm{LogicalMatrix(N, std::move(l_cols)), LogicalMatrix(Q, std::move(h_cols))};
}

}  // namespace recon
