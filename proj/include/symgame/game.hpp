#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symgame/matrix.hpp"

namespace symgame {

/// Input that cannot be read (malformed file, bad shape, inexact entry).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally valid input that violates a domain constraint
/// (player/strategy bounds, size guards).
struct ConstraintError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shape of a finite game: n players, each with the same kappa
/// strategies. Requires n >= 2, kappa >= 2, kappa^n <= 10^6.
struct GameSpec {
  GameSpec(int players, int strategies);

  int players;
  int strategies;

  /// kappa^n, the number of strategy profiles.
  long long profile_count() const;
  /// n * kappa^n, the length of a structure vector.
  long long structure_length() const { return players * profile_count(); }

  friend bool operator==(const GameSpec& a, const GameSpec& b) {
    return a.players == b.players && a.strategies == b.strategies;
  }
};

/// One strategy choice per player, each in 1..kappa.
struct StrategyProfile {
  std::vector<int> choices;

  int choice(int player) const { return choices.at(static_cast<std::size_t>(player - 1)); }
  std::string str() const;  // "121" for kappa <= 9, else "1,2,1"

  friend bool operator==(const StrategyProfile& a, const StrategyProfile& b) {
    return a.choices == b.choices;
  }
};

/// 1-based position of the profile in the lexicographic order with
/// player 1 most significant; equals the index of |x|_j delta_kappa^{x_j}
/// in the canonical basis of R^{kappa^n}.
long long profile_index(const GameSpec& spec, const StrategyProfile& s);

/// Inverse of profile_index.
StrategyProfile profile_at(const GameSpec& spec, long long index);

/// The n payoff row vectors V^c_i, each 1-by-kappa^n, entries indexed
/// by profile_index.
class StructureVector {
 public:
  StructureVector(const GameSpec& spec, std::vector<Matrix> per_player);

  int players() const { return static_cast<int>(per_player_.size()); }
  const Matrix& row(int player) const;  // 1-based

  /// [V^c_1, ..., V^c_n] as a single 1-by-n*kappa^n row.
  Matrix concatenated() const;
  static StructureVector from_concatenated(const GameSpec& spec, const Matrix& row);

  bool is_zero() const;

  friend bool operator==(const StructureVector& a, const StructureVector& b) {
    return a.per_player_ == b.per_player_;
  }

 private:
  std::vector<Matrix> per_player_;
};

/// A finite normal-form game in structure-vector form.
class FiniteGame {
 public:
  FiniteGame(GameSpec spec, StructureVector sv, std::string name = "");

  static FiniteGame zero(const GameSpec& spec, std::string name = "");
  /// tables[i-1][k-1] is player i's payoff at the profile with index k
  /// (the column order used when a game is printed as a table).
  static FiniteGame from_payoff_tables(const GameSpec& spec,
                                       const std::vector<std::vector<Rational>>& tables,
                                       std::string name = "");

  const GameSpec& spec() const { return spec_; }
  const StructureVector& structure() const { return sv_; }
  const std::string& name() const { return name_; }

  Rational payoff(int player, const StrategyProfile& s) const;
  std::vector<std::vector<Rational>> payoff_tables() const;

  /// For two-player games: the kappa-by-kappa payoff matrices (A, B) of
  /// players 1 and 2, with row_stack(A)^T = V^c_1 and row_stack(B)^T = V^c_2.
  std::pair<Matrix, Matrix> two_player_matrices() const;

 private:
  GameSpec spec_;
  StructureVector sv_;
  std::string name_;
};

}  // namespace symgame
