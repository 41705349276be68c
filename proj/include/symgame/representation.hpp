#pragma once

#include "symgame/matrix.hpp"
#include "symgame/permutation.hpp"

namespace symgame {

/// n-by-n logical matrix with column i = delta_n^{sigma(i)}, so that
/// P_sigma delta_n^i = delta_n^j exactly when sigma(i) = j, and
/// P_{mu o sigma} = P_mu P_sigma.
Matrix permutation_matrix(const Permutation& p);

/// Projector onto the strategy of one player: the kappa-by-kappa^n
/// logical matrix mapping the stp form of a profile to the vector form
/// of its `player`-th component (1 <= player <= players).
Matrix factor_projector(int players, int kappa, int player);

/// Permutation matrix on stp-form profiles: applying it to
/// x_1 |x| ... |x| x_n yields x_{sigma^{-1}(1)} |x| ... |x| x_{sigma^{-1}(n)}.
struct ProfilePermutation {
  int players;
  int kappa;
  Matrix matrix;  // kappa^n square permutation matrix
};

ProfilePermutation profile_permutation(const Permutation& p, int kappa);

/// Action of sigma on structure vectors: the n*kappa^n square matrix
/// P_sigma (x) sign(sigma) T_sigma. A group homomorphism into the
/// orthogonal matrices; its fixed row vectors are exactly the
/// skew-symmetric games.
Matrix representation_matrix(const Permutation& p, int kappa);

}  // namespace symgame
