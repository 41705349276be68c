#include "symgame/game.hpp"

#include <sstream>

namespace symgame {

namespace {

constexpr long long kMaxProfiles = 1'000'000;

}  // namespace

GameSpec::GameSpec(int players_in, int strategies_in)
    : players(players_in), strategies(strategies_in) {
  if (players < 2) throw ConstraintError("GameSpec: players must be >= 2");
  if (strategies < 2) throw ConstraintError("GameSpec: strategies must be >= 2");
  long long count = 1;
  for (int i = 0; i < players; ++i) {
    count *= strategies;
    if (count > kMaxProfiles)
      throw ConstraintError("GameSpec: size guard kappa^n <= 10^6 exceeded");
  }
}

long long GameSpec::profile_count() const {
  long long count = 1;
  for (int i = 0; i < players; ++i) count *= strategies;
  return count;
}

std::string StrategyProfile::str() const {
  std::ostringstream os;
  bool digits = true;
  for (int c : choices) digits = digits && c <= 9;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (!digits && i) os << ',';
    os << choices[i];
  }
  return os.str();
}

long long profile_index(const GameSpec& spec, const StrategyProfile& s) {
  if (static_cast<int>(s.choices.size()) != spec.players)
    throw ConstraintError("profile_index: profile length does not match player count");
  long long idx = 0;
  for (int c : s.choices) {
    if (c < 1 || c > spec.strategies)
      throw ConstraintError("profile_index: strategy choice out of range");
    idx = idx * spec.strategies + (c - 1);
  }
  return idx + 1;
}

StrategyProfile profile_at(const GameSpec& spec, long long index) {
  if (index < 1 || index > spec.profile_count())
    throw ConstraintError("profile_at: index out of range");
  std::vector<int> choices(static_cast<std::size_t>(spec.players));
  long long rem = index - 1;
  for (int i = spec.players - 1; i >= 0; --i) {
    choices[static_cast<std::size_t>(i)] = static_cast<int>(rem % spec.strategies) + 1;
    rem /= spec.strategies;
  }
  return StrategyProfile{std::move(choices)};
}

StructureVector::StructureVector(const GameSpec& spec, std::vector<Matrix> per_player)
    : per_player_(std::move(per_player)) {
  if (static_cast<int>(per_player_.size()) != spec.players)
    throw ConstraintError("StructureVector: row count does not match player count");
  for (const auto& r : per_player_)
    if (r.rows() != 1 || r.cols() != spec.profile_count())
      throw ConstraintError("StructureVector: payoff row has wrong shape");
}

const Matrix& StructureVector::row(int player) const {
  if (player < 1 || player > players())
    throw ConstraintError("StructureVector: player out of range");
  return per_player_[static_cast<std::size_t>(player - 1)];
}

Matrix StructureVector::concatenated() const { return hcat(per_player_); }

StructureVector StructureVector::from_concatenated(const GameSpec& spec, const Matrix& row) {
  if (row.rows() != 1 || row.cols() != spec.structure_length())
    throw ConstraintError("StructureVector: concatenated row has wrong shape");
  std::vector<Matrix> rows;
  rows.reserve(static_cast<std::size_t>(spec.players));
  const int k = static_cast<int>(spec.profile_count());
  for (int i = 0; i < spec.players; ++i) rows.push_back(row.col_block(i * k, k).materialized());
  return StructureVector(spec, std::move(rows));
}

bool StructureVector::is_zero() const {
  for (const auto& r : per_player_)
    if (!r.is_zero()) return false;
  return true;
}

FiniteGame::FiniteGame(GameSpec spec, StructureVector sv, std::string name)
    : spec_(spec), sv_(std::move(sv)), name_(std::move(name)) {
  if (sv_.players() != spec_.players)
    throw ConstraintError("FiniteGame: structure vector does not match spec");
}

FiniteGame FiniteGame::zero(const GameSpec& spec, std::string name) {
  std::vector<Matrix> rows(static_cast<std::size_t>(spec.players),
                           Matrix::zero(1, static_cast<int>(spec.profile_count())));
  return FiniteGame(spec, StructureVector(spec, std::move(rows)), std::move(name));
}

FiniteGame FiniteGame::from_payoff_tables(const GameSpec& spec,
                                          const std::vector<std::vector<Rational>>& tables,
                                          std::string name) {
  if (static_cast<int>(tables.size()) != spec.players)
    throw ConstraintError("from_payoff_tables: need one row per player");
  std::vector<Matrix> rows;
  rows.reserve(tables.size());
  for (const auto& t : tables) {
    if (static_cast<long long>(t.size()) != spec.profile_count())
      throw ConstraintError("from_payoff_tables: row length does not match profile count");
    rows.push_back(Matrix::row_vector(t));
  }
  return FiniteGame(spec, StructureVector(spec, std::move(rows)), std::move(name));
}

Rational FiniteGame::payoff(int player, const StrategyProfile& s) const {
  return sv_.row(player).at(0, static_cast<int>(profile_index(spec_, s)) - 1);
}

std::vector<std::vector<Rational>> FiniteGame::payoff_tables() const {
  std::vector<std::vector<Rational>> out;
  out.reserve(static_cast<std::size_t>(spec_.players));
  for (int i = 1; i <= spec_.players; ++i)
    out.push_back(sv_.row(i).materialized().dense_entries());
  return out;
}

std::pair<Matrix, Matrix> FiniteGame::two_player_matrices() const {
  if (spec_.players != 2)
    throw ConstraintError("two_player_matrices: requires a two-player game");
  const int k = spec_.strategies;
  auto reshape = [&](const Matrix& row) {
    return Matrix(k, k, row.materialized().dense_entries());
  };
  return {reshape(sv_.row(1)), reshape(sv_.row(2))};
}

}  // namespace symgame
