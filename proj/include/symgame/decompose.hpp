#pragma once

#include <vector>

#include "symgame/game.hpp"
#include "symgame/symmetry.hpp"

namespace symgame {

/// Orthogonal split of a structure vector into its symmetric,
/// skew-symmetric, and asymmetric parts, together with the coordinates
/// of the first two in the subspace bases. All values exact; the three
/// parts sum to the input and are pairwise orthogonal.
struct Decomposition {
  StructureVector symmetric_part;
  StructureVector skew_part;
  StructureVector asymmetric_part;
  std::vector<Rational> skew_coords;       // length beta
  std::vector<Rational> symmetric_coords;  // length alpha
};

/// Projects the game onto the skew-symmetric and symmetric bases (the
/// Gram matrix is diagonal, so each coordinate is a single quotient of
/// inner products) and takes the remainder as the asymmetric part.
Decomposition decompose(const FiniteGame& g);

/// Two-player closed form: S = (V^c_1 + V^c_2 W)/2 and
/// K = (V^c_1 - V^c_2 W)/2 with W = W_{[kappa,kappa]}; the asymmetric
/// part vanishes. Agrees exactly with decompose().
Decomposition two_player_decompose(const FiniteGame& g);

/// Summary of a decomposition: squared norms, purity flags, verdicts,
/// and subspace dimensions.
struct ClassifyReport {
  Decomposition parts;
  Rational symmetric_norm2;
  Rational skew_norm2;
  Rational asymmetric_norm2;
  bool pure_symmetric;   // V_G equals its symmetric part
  bool pure_skew;
  bool pure_asymmetric;
  SymmetryVerdict verdict;
  long long symmetric_dim;
  long long skew_dim;
  long long asymmetric_dim;
};

ClassifyReport classify(const FiniteGame& g);

}  // namespace symgame
