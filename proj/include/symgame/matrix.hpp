#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "symgame/rational.hpp"

namespace symgame {

/// The i-th column of the identity matrix I_dim (1-based index).
struct LogicalColumn {
  int dim;
  int index;
};

/// Dense matrix of exact rationals, immutable after construction.
///
/// A matrix whose columns are all standard basis vectors (a logical
/// matrix) additionally carries a compact column-index form; products
/// and Kronecker products of such matrices reduce to index arithmetic
/// and never touch the dense entries. Large logical matrices (identity,
/// swap) are held in index form only and materialized on demand.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols);  // zero-filled
  Matrix(int rows, int cols, std::vector<Rational> entries);  // row-major
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols);
  static Matrix ones_row(int n);
  /// delta_dim[c_1,...,c_r]: the logical matrix whose j-th column is
  /// the c_j-th column of I_dim (1-based).
  static Matrix logical(int dim, std::vector<int> columns);
  static Matrix basis_column(const LogicalColumn& c);
  static Matrix basis_column(int dim, int index);
  static Matrix row_vector(std::vector<Rational> entries);
  static Matrix column_vector(std::vector<Rational> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long entry_count() const { return static_cast<long long>(rows_) * cols_; }

  Rational at(int r, int c) const;

  bool is_logical() const { return !logical_.empty() || cols_ == 0; }
  /// 1-based column indices; only valid when is_logical().
  const std::vector<int>& logical_columns() const;
  /// Logical matrix that is square with bijective column indices.
  bool is_permutation() const;

  bool is_zero() const;

  /// Dense copy (no-op when dense entries are already present).
  Matrix materialized() const;
  /// Row-major dense entries; requires a materialized matrix.
  const std::vector<Rational>& dense_entries() const;

  Matrix row(int r) const;
  Matrix col(int c) const;
  /// Columns [first, first+count) as a rows() x count matrix (0-based).
  Matrix col_block(int first, int count) const;

  Matrix transpose() const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);  // conventional product
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Rational& s);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const;  // human-readable, exact entries

 private:
  void detect_logical();

  int rows_, cols_;
  std::vector<Rational> dense_;  // row-major; may be empty when logical_ is set
  std::vector<int> logical_;     // 1-based column indices; empty if not logical
};

/// Horizontal / vertical concatenation. Empty blocks (0 rows / 0 cols)
/// participate with the usual dimension rules.
Matrix hcat(const std::vector<Matrix>& blocks);
Matrix vcat(const std::vector<Matrix>& blocks);

/// Sum of entrywise products over two same-shaped matrices (for row or
/// column vectors this is the standard inner product).
Rational inner_product(const Matrix& a, const Matrix& b);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace symgame
