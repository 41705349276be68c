#pragma once

#include <optional>

#include "symgame/game.hpp"
#include "symgame/permutation.hpp"

namespace symgame {

/// First counterexample found by a definition-based check, in canonical
/// enumeration order (permutations lexicographic, then profile index,
/// then player).
struct Witness {
  Permutation sigma;
  StrategyProfile profile;
  int player;
};

/// Quantifier scope for the definition-based predicates: the full group
/// is the oracle; the transpositions (1,i) generate S_n and give an
/// equivalent but much cheaper check.
enum class CheckScope { full_group, generators };

/// Definition check for symmetry: c_i(x) = c_{sigma(i)}(x permuted by
/// sigma^{-1}) for all sigma, profiles and players. Enumerates
/// n! * kappa^n * n cases (size-guarded).
bool is_symmetric_def(const FiniteGame& g, Witness* witness = nullptr,
                      CheckScope scope = CheckScope::full_group);

/// Definition check for skew-symmetry: as above with the sign(sigma)
/// factor.
bool is_skew_def(const FiniteGame& g, Witness* witness = nullptr,
                 CheckScope scope = CheckScope::full_group);

/// Matrix condition for skew-symmetry: the block relations tying each
/// V^c_i to V^c_1 through swap-matrix chains, plus (for n > 2) the
/// within-first-payoff cancellation conditions. Equivalent to
/// is_skew_def.
bool is_skew_matrix_cond(const FiniteGame& g);

/// Matrix condition for symmetry: V^c_1 invariance under the tail swap
/// chains plus V^c_i = V^c_1 W_{[kappa^{i-1},kappa]}. Equivalent to
/// is_symmetric_def.
bool is_symmetric_matrix_cond(const FiniteGame& g);

/// Invariance of V_G under the structure-vector representation of every
/// sigma (or of the generators). Equivalent to is_skew_def.
bool is_representation_invariant(const FiniteGame& g,
                                 CheckScope scope = CheckScope::full_group);

/// Payoffs of all players sum to zero at every profile.
bool is_zero_sum(const FiniteGame& g);

/// Orthogonality of the structure vector to both the skew-symmetric and
/// the symmetric basis rows (membership in the asymmetric subspace).
bool is_asymmetric(const FiniteGame& g);

struct SymmetryVerdict {
  bool symmetric = false;
  bool skew = false;
  bool asymmetric = false;
  std::optional<Witness> symmetric_witness;
  std::optional<Witness> skew_witness;
};

/// Verdict on all three subspace memberships. Membership itself is
/// decided by the matrix conditions and basis orthogonality (any game
/// size); witnesses come from the definition checks and are only
/// populated when requested, subject to their size guard.
SymmetryVerdict classify_symmetry(const FiniteGame& g, bool with_witnesses = false);

}  // namespace symgame
