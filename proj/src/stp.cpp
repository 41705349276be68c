#include "symgame/stp.hpp"

#include <numeric>
#include <stdexcept>

namespace symgame {

Matrix kron(const Matrix& a, const Matrix& b) {
  const int m = a.rows(), n = a.cols(), p = b.rows(), q = b.cols();
  if (a.is_logical() && b.is_logical()) {
    const auto& ia = a.logical_columns();
    const auto& ib = b.logical_columns();
    std::vector<int> idx(static_cast<std::size_t>(n) * q);
    for (int ca = 0; ca < n; ++ca)
      for (int cb = 0; cb < q; ++cb)
        idx[static_cast<std::size_t>(ca) * q + cb] =
            (ia[static_cast<std::size_t>(ca)] - 1) * p + ib[static_cast<std::size_t>(cb)];
    return Matrix::logical(m * p, std::move(idx));
  }
  Matrix da = a.materialized();
  Matrix db = b.materialized();
  std::vector<Rational> out(static_cast<std::size_t>(m) * p * n * q);
  const int cols = n * q;
  for (int ra = 0; ra < m; ++ra)
    for (int ca = 0; ca < n; ++ca) {
      const Rational v = da.at(ra, ca);
      if (v.is_zero()) continue;
      for (int rb = 0; rb < p; ++rb)
        for (int cb = 0; cb < q; ++cb) {
          const Rational w = db.at(rb, cb);
          if (w.is_zero()) continue;
          out[static_cast<std::size_t>(ra * p + rb) * cols + (ca * q + cb)] = v * w;
        }
    }
  return Matrix(m * p, cols, std::move(out));
}

Matrix stp(const Matrix& a, const Matrix& b) {
  const long long n = a.cols(), p = b.rows();
  if (n == 0 || p == 0) throw std::invalid_argument("stp: empty inner dimension");
  if (n == p) return a * b;
  const long long t = std::lcm(n, p);
  const Matrix left = t / n == 1 ? a : kron(a, Matrix::identity(static_cast<int>(t / n)));
  const Matrix right = t / p == 1 ? b : kron(b, Matrix::identity(static_cast<int>(t / p)));
  return left * right;
}

Matrix swap_matrix(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("swap_matrix: dimensions must be positive");
  // column (i-1)n + j holds delta_n^j (x) delta_m^i = delta_{mn}^{(j-1)m+i}
  std::vector<int> idx(static_cast<std::size_t>(m) * n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      idx[static_cast<std::size_t>(i - 1) * n + (j - 1)] = (j - 1) * m + i;
  return Matrix::logical(m * n, std::move(idx));
}

Matrix khatri_rao(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("khatri_rao: column counts differ");
  const int n = a.cols(), p = a.rows(), q = b.rows();
  if (a.is_logical() && b.is_logical()) {
    const auto& ia = a.logical_columns();
    const auto& ib = b.logical_columns();
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
      idx[static_cast<std::size_t>(c)] =
          (ia[static_cast<std::size_t>(c)] - 1) * q + ib[static_cast<std::size_t>(c)];
    return Matrix::logical(p * q, std::move(idx));
  }
  std::vector<Matrix> cols;
  cols.reserve(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) cols.push_back(stp(a.col(c), b.col(c)));
  return hcat(cols);
}

Matrix row_stack(const Matrix& a) {
  Matrix d = a.materialized();
  std::vector<Rational> out = d.dense_entries();  // row-major is already V_R order
  return Matrix::column_vector(std::move(out));
}

Matrix col_stack(const Matrix& a) { return row_stack(a.transpose()); }

}  // namespace symgame
