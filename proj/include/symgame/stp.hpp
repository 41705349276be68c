#pragma once

#include "symgame/matrix.hpp"

namespace symgame {

/// Semi-tensor product A |x| B = (A (x) I_{t/n})(B (x) I_{t/p}) with
/// t = lcm(n, p), for A m-by-n and B p-by-q; the result is
/// (mt/n)-by-(qt/p). Coincides with the conventional product when
/// n = p. Total on all matrix shapes.
Matrix stp(const Matrix& a, const Matrix& b);

/// Kronecker product, (m*p)-by-(n*q).
Matrix kron(const Matrix& a, const Matrix& b);

/// Swap matrix W_{[m,n]}: the mn-by-mn permutation matrix with
/// W (x (x) y) = y (x) x for x in R^m, y in R^n. W_{[m,1]} = W_{[1,m]} = I_m.
Matrix swap_matrix(int m, int n);

/// Khatri-Rao product: column i of the result is stp of column i of a
/// and column i of b; both inputs must have the same column count.
Matrix khatri_rao(const Matrix& a, const Matrix& b);

/// Row stacking V_R(A): rows of A concatenated into an mn-by-1 column.
Matrix row_stack(const Matrix& a);

/// Column stacking V_C(A) = V_R(A^T).
Matrix col_stack(const Matrix& a);

}  // namespace symgame
