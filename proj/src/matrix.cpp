#include "symgame/matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace symgame {

namespace {

void check_shape(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
}

}  // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  check_shape(rows, cols);
  dense_.assign(static_cast<std::size_t>(entry_count()), Rational(0));
}

Matrix::Matrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), dense_(std::move(entries)) {
  check_shape(rows, cols);
  if (static_cast<long long>(dense_.size()) != entry_count())
    throw std::invalid_argument("Matrix: entry count does not match shape");
  detect_logical();
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  dense_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw std::invalid_argument("Matrix: ragged initializer");
    dense_.insert(dense_.end(), r.begin(), r.end());
  }
  detect_logical();
}

Matrix Matrix::identity(int n) {
  std::vector<int> cols(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cols[static_cast<std::size_t>(i)] = i + 1;
  return logical(n, std::move(cols));
}

Matrix Matrix::zero(int rows, int cols) { return Matrix(rows, cols); }

Matrix Matrix::ones_row(int n) {
  return logical(1, std::vector<int>(static_cast<std::size_t>(n), 1));
}

Matrix Matrix::logical(int dim, std::vector<int> columns) {
  if (dim <= 0) throw std::invalid_argument("Matrix::logical: dim must be positive");
  for (int c : columns)
    if (c < 1 || c > dim) throw std::invalid_argument("Matrix::logical: index out of range");
  Matrix m;
  m.rows_ = dim;
  m.cols_ = static_cast<int>(columns.size());
  m.logical_ = std::move(columns);
  return m;
}

Matrix Matrix::basis_column(const LogicalColumn& c) { return basis_column(c.dim, c.index); }

Matrix Matrix::basis_column(int dim, int index) {
  return logical(dim, std::vector<int>{index});
}

Matrix Matrix::row_vector(std::vector<Rational> entries) {
  const int n = static_cast<int>(entries.size());
  return Matrix(1, n, std::move(entries));
}

Matrix Matrix::column_vector(std::vector<Rational> entries) {
  const int n = static_cast<int>(entries.size());
  return Matrix(n, 1, std::move(entries));
}

void Matrix::detect_logical() {
  if (rows_ == 0 || cols_ == 0) return;
  std::vector<int> cols(static_cast<std::size_t>(cols_), 0);
  for (int c = 0; c < cols_; ++c) {
    int one_row = 0;  // 1-based; 0 = not found yet
    for (int r = 0; r < rows_; ++r) {
      const Rational& v = dense_[static_cast<std::size_t>(r) * cols_ + c];
      if (v.is_zero()) continue;
      if (one_row != 0 || v != Rational(1)) return;
      one_row = r + 1;
    }
    if (one_row == 0) return;
    cols[static_cast<std::size_t>(c)] = one_row;
  }
  logical_ = std::move(cols);
}

Rational Matrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("Matrix::at: index out of range");
  if (!dense_.empty()) return dense_[static_cast<std::size_t>(r) * cols_ + c];
  return logical_[static_cast<std::size_t>(c)] == r + 1 ? Rational(1) : Rational(0);
}

const std::vector<int>& Matrix::logical_columns() const {
  if (!is_logical()) throw std::logic_error("Matrix: not a logical matrix");
  return logical_;
}

bool Matrix::is_permutation() const {
  if (!is_logical() || rows_ != cols_) return false;
  std::vector<bool> seen(static_cast<std::size_t>(rows_), false);
  for (int c : logical_) {
    if (seen[static_cast<std::size_t>(c - 1)]) return false;
    seen[static_cast<std::size_t>(c - 1)] = true;
  }
  return true;
}

bool Matrix::is_zero() const {
  if (dense_.empty()) return cols_ == 0;  // nonempty logical matrices are nonzero
  for (const auto& v : dense_)
    if (!v.is_zero()) return false;
  return true;
}

Matrix Matrix::materialized() const {
  if (!dense_.empty() || entry_count() == 0) {
    Matrix m = *this;
    if (m.dense_.empty()) m.dense_.assign(static_cast<std::size_t>(entry_count()), Rational(0));
    return m;
  }
  Matrix m(rows_, cols_);
  for (int c = 0; c < cols_; ++c)
    m.dense_[static_cast<std::size_t>(logical_[static_cast<std::size_t>(c)] - 1) * cols_ + c] = Rational(1);
  m.logical_ = logical_;
  return m;
}

const std::vector<Rational>& Matrix::dense_entries() const {
  if (dense_.empty() && entry_count() != 0)
    throw std::logic_error("Matrix: dense entries not materialized");
  return dense_;
}

Matrix Matrix::row(int r) const {
  if (r < 0 || r >= rows_) throw std::out_of_range("Matrix::row");
  std::vector<Rational> out(static_cast<std::size_t>(cols_));
  for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(c)] = at(r, c);
  return row_vector(std::move(out));
}

Matrix Matrix::col(int c) const {
  if (c < 0 || c >= cols_) throw std::out_of_range("Matrix::col");
  if (is_logical()) return basis_column(rows_, logical_[static_cast<std::size_t>(c)]);
  std::vector<Rational> out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out[static_cast<std::size_t>(r)] = at(r, c);
  return column_vector(std::move(out));
}

Matrix Matrix::col_block(int first, int count) const {
  if (first < 0 || count < 0 || first + count > cols_)
    throw std::out_of_range("Matrix::col_block");
  if (is_logical() && dense_.empty()) {
    std::vector<int> cols(logical_.begin() + first, logical_.begin() + first + count);
    return logical(rows_, std::move(cols));
  }
  Matrix m(rows_, count);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < count; ++c)
      m.dense_[static_cast<std::size_t>(r) * count + c] = at(r, first + c);
  m.detect_logical();
  return m;
}

Matrix Matrix::transpose() const {
  if (is_permutation()) {
    std::vector<int> inv(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c) inv[static_cast<std::size_t>(logical_[static_cast<std::size_t>(c)] - 1)] = c + 1;
    return logical(rows_, std::move(inv));
  }
  Matrix src = materialized();
  Matrix m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      m.dense_[static_cast<std::size_t>(c) * rows_ + r] = src.dense_[static_cast<std::size_t>(r) * cols_ + c];
  m.detect_logical();
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = materialized();
  m.logical_.clear();
  for (auto& v : m.dense_) v = -v;
  m.detect_logical();
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("Matrix: shape mismatch in addition");
  Matrix ma = a.materialized();
  Matrix mb = b.materialized();
  Matrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < m.dense_.size(); ++i) m.dense_[i] = ma.dense_[i] + mb.dense_[i];
  m.detect_logical();
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("Matrix: shape mismatch in subtraction");
  Matrix ma = a.materialized();
  Matrix mb = b.materialized();
  Matrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < m.dense_.size(); ++i) m.dense_[i] = ma.dense_[i] - mb.dense_[i];
  m.detect_logical();
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("Matrix: inner dimensions do not match (use stp for the semi-tensor product)");
  const int m = a.rows_, n = a.cols_, p = b.cols_;
  // logical * logical: pure index composition
  if (a.is_logical() && b.is_logical() && n > 0) {
    std::vector<int> cols(static_cast<std::size_t>(p));
    for (int c = 0; c < p; ++c)
      cols[static_cast<std::size_t>(c)] = a.logical_[static_cast<std::size_t>(b.logical_[static_cast<std::size_t>(c)] - 1)];
    return Matrix::logical(m, std::move(cols));
  }
  // dense * logical: gather columns of a
  if (b.is_logical()) {
    Matrix da = a.materialized();
    Matrix out(m, p);
    for (int c = 0; c < p; ++c) {
      const int src = b.logical_[static_cast<std::size_t>(c)] - 1;
      for (int r = 0; r < m; ++r)
        out.dense_[static_cast<std::size_t>(r) * p + c] = da.dense_[static_cast<std::size_t>(r) * n + src];
    }
    out.detect_logical();
    return out;
  }
  // logical * dense: scatter rows of b
  if (a.is_logical()) {
    Matrix db = b.materialized();
    Matrix out(m, p);
    for (int k = 0; k < n; ++k) {
      const int dst = a.logical_[static_cast<std::size_t>(k)] - 1;
      for (int c = 0; c < p; ++c)
        out.dense_[static_cast<std::size_t>(dst) * p + c] += db.dense_[static_cast<std::size_t>(k) * p + c];
    }
    out.detect_logical();
    return out;
  }
  Matrix out(m, p);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < n; ++k) {
      const Rational& aik = a.dense_[static_cast<std::size_t>(i) * n + k];
      if (aik.is_zero()) continue;
      for (int j = 0; j < p; ++j) {
        const Rational& bkj = b.dense_[static_cast<std::size_t>(k) * p + j];
        if (bkj.is_zero()) continue;
        out.dense_[static_cast<std::size_t>(i) * p + j] += aik * bkj;
      }
    }
  }
  out.detect_logical();
  return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix m = a.materialized();
  m.logical_.clear();
  for (auto& v : m.dense_) v = s * v;
  m.detect_logical();
  return m;
}

Matrix operator*(const Matrix& a, const Rational& s) { return s * a; }

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.is_logical() && b.is_logical()) return a.logical_ == b.logical_;
  for (int r = 0; r < a.rows_; ++r)
    for (int c = 0; c < a.cols_; ++c)
      if (a.at(r, c) != b.at(r, c)) return false;
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ");
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
    os << (r + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

Matrix hcat(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  const int rows = blocks.front().rows();
  int cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hcat: row counts differ");
    cols += b.cols();
  }
  // keep the index form when every block is logical
  bool all_logical = true;
  for (const auto& b : blocks) all_logical = all_logical && b.is_logical();
  if (all_logical && rows > 0) {
    std::vector<int> idx;
    idx.reserve(static_cast<std::size_t>(cols));
    for (const auto& b : blocks)
      idx.insert(idx.end(), b.logical_columns().begin(), b.logical_columns().end());
    return Matrix::logical(rows, std::move(idx));
  }
  std::vector<Rational> out(static_cast<std::size_t>(rows) * cols);
  int off = 0;
  for (const auto& b : blocks) {
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < b.cols(); ++c)
        out[static_cast<std::size_t>(r) * cols + off + c] = b.at(r, c);
    off += b.cols();
  }
  return Matrix(rows, cols, std::move(out));
}

Matrix vcat(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  const int cols = blocks.front().cols();
  int rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vcat: column counts differ");
    rows += b.rows();
  }
  std::vector<Rational> out(static_cast<std::size_t>(rows) * cols);
  int off = 0;
  for (const auto& b : blocks) {
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < cols; ++c)
        out[static_cast<std::size_t>(off + r) * cols + c] = b.at(r, c);
    off += b.rows();
  }
  return Matrix(rows, cols, std::move(out));
}

Rational inner_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("inner_product: shape mismatch");
  Matrix ma = a.materialized();
  Matrix mb = b.materialized();
  Rational sum(0);
  const auto& da = ma.dense_entries();
  const auto& db = mb.dense_entries();
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (da[i].is_zero() || db[i].is_zero()) continue;
    sum += da[i] * db[i];
  }
  return sum;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.str(); }

}  // namespace symgame
