#pragma once

// Reference games used across the suites: the parametric symmetric and
// skew-symmetric families on (3,2), the basis-vector game that all the
// golden decomposition numbers refer to, and an independently built
// skew family on (3,3). Construction here deliberately avoids the swap
// chains of the library: payoff rows are laid out by direct profile
// relabeling so they can serve as an oracle for them.

#include <vector>

#include "symgame/game.hpp"
#include "symgame/matrix.hpp"
#include "symgame/permutation.hpp"

namespace symgame::testing {

inline FiniteGame symmetric_fixture_32(const Rational& a, const Rational& b,
                                       const Rational& c, const Rational& d,
                                       const Rational& e, const Rational& f) {
  const GameSpec spec(3, 2);
  return FiniteGame::from_payoff_tables(spec,
                                        {{a, b, b, d, c, e, e, f},
                                         {a, b, c, e, b, d, e, f},
                                         {a, c, b, e, b, e, d, f}});
}

inline FiniteGame skew_fixture_32(const Rational& g, const Rational& h) {
  const GameSpec spec(3, 2);
  return FiniteGame::from_payoff_tables(spec,
                                        {{0, g, -g, 0, 0, h, -h, 0},
                                         {0, -g, 0, -h, g, 0, h, 0},
                                         {0, 0, g, h, -g, -h, 0, 0}});
}

/// V^c_1 = delta_8^3, V^c_2 = delta_8^6, V^c_3 = delta_8^7.
inline FiniteGame basis_vector_game_32() {
  const GameSpec spec(3, 2);
  return FiniteGame::from_payoff_tables(spec,
                                        {{0, 0, 1, 0, 0, 0, 0, 0},
                                         {0, 0, 0, 0, 0, 1, 0, 0},
                                         {0, 0, 0, 0, 0, 0, 1, 0}});
}

/// Extends a first-player payoff row to a full skew-symmetric structure
/// vector by direct profile relabeling:
/// V^c_i(x) = -V^c_1(x with choices of players 1 and i exchanged).
inline FiniteGame skew_extend_from_player1(const GameSpec& spec, const Matrix& v1) {
  std::vector<std::vector<Rational>> tables;
  tables.push_back(v1.materialized().dense_entries());
  for (int i = 2; i <= spec.players; ++i) {
    std::vector<Rational> row(static_cast<std::size_t>(spec.profile_count()));
    for (long long k = 1; k <= spec.profile_count(); ++k) {
      StrategyProfile x = profile_at(spec, k);
      std::swap(x.choices[0], x.choices[static_cast<std::size_t>(i - 1)]);
      row[static_cast<std::size_t>(k - 1)] =
          -v1.at(0, static_cast<int>(profile_index(spec, x)) - 1);
    }
    tables.push_back(std::move(row));
  }
  return FiniteGame::from_payoff_tables(spec, tables);
}

/// Skew-symmetric family on (3,3): the first-player row is made of the
/// three 3x3 skew blocks with parameters (a1,a2,a3), (b1,b2,b3),
/// (c1,c2,c3); the remaining rows follow by relabeling.
inline FiniteGame skew_fixture_33(const std::vector<Rational>& p) {
  const GameSpec spec(3, 3);
  const Rational &a1 = p[0], &a2 = p[1], &a3 = p[2];
  const Rational &b1 = p[3], &b2 = p[4], &b3 = p[5];
  const Rational &c1 = p[6], &c2 = p[7], &c3 = p[8];
  const Matrix v1 = Matrix::row_vector({0, a1, a2, -a1, 0, a3, -a2, -a3, 0,
                                        0, b1, b2, -b1, 0, b3, -b2, -b3, 0,
                                        0, c1, c2, -c1, 0, c3, -c2, -c3, 0});
  return skew_extend_from_player1(spec, v1);
}

/// Constraint matrix of the definitional quantifier system on structure
/// vectors: one row per (sigma, profile, player) requiring
/// c_i(x) - factor * c_{sigma(i)}(x permuted) = 0, where factor is
/// sign(sigma) for the skew system and 1 for the symmetric one. The
/// nullspace of this matrix is the subspace itself.
inline Matrix definition_constraints(const GameSpec& spec, bool signed_system) {
  const int n = spec.players;
  const long long profiles = spec.profile_count();
  std::vector<Matrix> rows;
  for (const Permutation& sigma : all_permutations(n)) {
    if (sigma.is_identity()) continue;
    const Permutation inv = sigma.inverse();
    for (long long k = 1; k <= profiles; ++k) {
      const StrategyProfile x = profile_at(spec, k);
      std::vector<int> permuted(static_cast<std::size_t>(n));
      for (int j = 1; j <= n; ++j) permuted[static_cast<std::size_t>(j - 1)] = x.choice(inv(j));
      const long long yk = profile_index(spec, StrategyProfile{permuted});
      for (int i = 1; i <= n; ++i) {
        std::vector<Rational> row(static_cast<std::size_t>(spec.structure_length()));
        row[static_cast<std::size_t>((i - 1) * profiles + k - 1)] += Rational(1);
        const Rational factor = signed_system ? Rational(sigma.sign()) : Rational(1);
        row[static_cast<std::size_t>((sigma(i) - 1) * profiles + yk - 1)] -= factor;
        rows.push_back(Matrix::row_vector(std::move(row)));
      }
    }
  }
  return vcat(rows);
}

}  // namespace symgame::testing
