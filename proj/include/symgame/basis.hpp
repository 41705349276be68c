#pragma once

#include <utility>
#include <vector>

#include "symgame/game.hpp"
#include "symgame/matrix.hpp"

namespace symgame {

/// Strictly increasing tuple (z_1 < ... < z_{n-1}) over 1..kappa; the
/// index set behind the skew-symmetric basis.
struct StrictTuple {
  std::vector<int> values;
};

/// Non-decreasing tuple (z_1 <= ... <= z_{n-1}) over 1..kappa, with the
/// size of its orbit under permutations of the n-1 positions.
struct WeakTuple {
  std::vector<int> values;
  long long orbit_size;  // (n-1)! / prod(multiplicity!)
};

/// All strictly increasing tuples in lexicographic order; there are
/// C(kappa, n-1) of them (none when n > kappa + 1).
std::vector<StrictTuple> strict_tuples(const GameSpec& spec);

/// All non-decreasing tuples in lexicographic order; there are
/// C(n+kappa-2, n-1) of them, and their orbit sizes sum to kappa^{n-1}.
std::vector<WeakTuple> weak_tuples(const GameSpec& spec);

/// The distinct rearrangements of a weak tuple, in lexicographic order;
/// exactly orbit_size of them.
std::vector<std::vector<int>> tuple_rearrangements(const WeakTuple& t);

long long binomial(int n, int k);

/// dim K = kappa * C(kappa, n-1) ("beta").
long long skew_dimension(const GameSpec& spec);
/// dim S = kappa * C(n+kappa-2, n-1) ("alpha").
long long symmetric_dimension(const GameSpec& spec);
/// dim E = n*kappa^n - alpha - beta.
long long asymmetric_dimension(const GameSpec& spec);

/// Signed indicator row (1 x kappa^n): value sign(sigma) at each profile
/// (j, z_{sigma(1)}, ..., z_{sigma(n-1)}), sigma over all permutations of
/// the tuple positions; (n-1)! nonzero entries, all +-1.
Matrix skew_basis_row(const GameSpec& spec, const StrictTuple& z, int strategy);

/// 0/1 indicator row (1 x kappa^n): value 1 at each profile (j, w) with
/// w a rearrangement of the tuple; orbit_size nonzero entries.
Matrix symmetric_basis_row(const GameSpec& spec, const WeakTuple& z, int strategy);

enum class BasisKind { skew_head, skew, symmetric_head, symmetric, combined };

/// Row-stacked basis of a subspace. labels[r] = (tuple index, strategy),
/// both 1-based, for the rows that come from a tuple/strategy pair; for
/// the combined basis the skew labels precede the symmetric ones.
struct BasisMatrix {
  BasisKind kind;
  Matrix mat;
  std::vector<std::pair<int, int>> labels;

  int rows() const { return mat.rows(); }
};

/// Basis of the admissible first-player payoffs of skew-symmetric games:
/// the stacked skew_basis_row's, kappa*l rows by kappa^n columns.
BasisMatrix skew_player1_basis(const GameSpec& spec);

/// Basis of the skew-symmetric subspace: each head row extended across
/// all n payoff blocks by the swap-matrix chains; beta rows by n*kappa^n
/// columns, pairwise orthogonal with squared norm n!.
BasisMatrix skew_basis(const GameSpec& spec);

/// Basis of the admissible first-player payoffs of symmetric games:
/// stacked symmetric_basis_row's, kappa*p rows by kappa^n columns.
BasisMatrix symmetric_player1_basis(const GameSpec& spec);

/// Basis of the symmetric subspace; alpha rows by n*kappa^n columns,
/// pairwise orthogonal with squared norm n*orbit_size per row.
BasisMatrix symmetric_basis(const GameSpec& spec);

/// Skew basis stacked over the symmetric basis; full row rank, diagonal
/// Gram matrix.
BasisMatrix combined_basis(const GameSpec& spec);

/// mat * mat^T.
Matrix gram_matrix(const BasisMatrix& basis);

}  // namespace symgame
