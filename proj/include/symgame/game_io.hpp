#pragma once

#include <iosfwd>
#include <string>

#include "symgame/game.hpp"

namespace symgame {

/// Reads a game from the JSON document
///   {"n": 3, "kappa": 2, "payoffs": [[...], ...], "name": "..."}
/// Payoff entries are integers or exact "p/q" strings; decimal notation
/// is rejected. Throws ParseError / ConstraintError.
FiniteGame load_game(std::istream& in);
FiniteGame load_game_file(const std::string& path);

/// Writes the same document. Integer payoffs are emitted as JSON
/// numbers when they fit, everything else as exact "p/q" strings.
/// Output is deterministic for a given game.
void save_game(const FiniteGame& game, std::ostream& out);
void save_game_file(const FiniteGame& game, const std::string& path);

/// Renders the payoff table: one column per profile in canonical order,
/// one row per payoff function. `precision` is the number of decimal
/// digits; with `exact` the entries are printed as rationals instead.
std::string render_table(const FiniteGame& game, int precision = 4, bool exact = false);

}  // namespace symgame
