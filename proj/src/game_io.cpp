#include "symgame/game_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace symgame {

namespace {

using nlohmann::ordered_json;

Rational entry_from_json(const ordered_json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
      return Rational::parse(v.dump());
    return Rational(static_cast<long long>(v.get<std::int64_t>()), 1);
  }
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (v.is_number())
    throw ParseError("payoff entries must be exact: got a decimal number " + v.dump());
  throw ParseError("payoff entries must be integers or \"p/q\" strings, got " + v.dump());
}

ordered_json entry_to_json(const Rational& r) {
  if (r.is_integer() && r.numerator().fits_slong_p())
    return ordered_json(r.numerator().get_si());
  return ordered_json(r.str());
}

}  // namespace

FiniteGame load_game(std::istream& in) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("game document must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("missing integer field \"n\"");
  if (!doc.contains("kappa") || !doc["kappa"].is_number_integer())
    throw ParseError("missing integer field \"kappa\"");
  if (!doc.contains("payoffs") || !doc["payoffs"].is_array())
    throw ParseError("missing array field \"payoffs\"");
  const GameSpec spec(doc["n"].get<int>(), doc["kappa"].get<int>());
  std::vector<std::vector<Rational>> tables;
  for (const auto& row : doc["payoffs"]) {
    if (!row.is_array()) throw ParseError("\"payoffs\" must be an array of arrays");
    std::vector<Rational> r;
    r.reserve(row.size());
    for (const auto& v : row) r.push_back(entry_from_json(v));
    tables.push_back(std::move(r));
  }
  if (static_cast<int>(tables.size()) != spec.players)
    throw ParseError("\"payoffs\" must have one row per player");
  for (const auto& r : tables)
    if (static_cast<long long>(r.size()) != spec.profile_count())
      throw ParseError("each payoff row must have kappa^n entries");
  std::string name = doc.contains("name") && doc["name"].is_string()
                         ? doc["name"].get<std::string>()
                         : "";
  return FiniteGame::from_payoff_tables(spec, tables, std::move(name));
}

FiniteGame load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return load_game(in);
}

void save_game(const FiniteGame& game, std::ostream& out) {
  ordered_json doc;
  doc["n"] = game.spec().players;
  doc["kappa"] = game.spec().strategies;
  doc["payoffs"] = ordered_json::array();
  for (const auto& row : game.payoff_tables()) {
    ordered_json r = ordered_json::array();
    for (const auto& v : row) r.push_back(entry_to_json(v));
    doc["payoffs"].push_back(std::move(r));
  }
  if (!game.name().empty()) doc["name"] = game.name();
  out << doc.dump(2) << "\n";
}

void save_game_file(const FiniteGame& game, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  save_game(game, out);
}

std::string render_table(const FiniteGame& game, int precision, bool exact) {
  if (precision < 1 || precision > 12)
    throw ConstraintError("render_table: precision must be in 1..12");
  const GameSpec& spec = game.spec();
  const long long profiles = spec.profile_count();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header;
  header.push_back("c\\s");
  for (long long k = 1; k <= profiles; ++k) header.push_back(profile_at(spec, k).str());
  cells.push_back(std::move(header));
  const auto tables = game.payoff_tables();
  for (int i = 1; i <= spec.players; ++i) {
    std::vector<std::string> row;
    row.push_back("c_" + std::to_string(i));
    for (const auto& v : tables[static_cast<std::size_t>(i - 1)])
      row.push_back(exact ? v.str() : v.decimal(precision));
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << "  ";
      os << row[c] << std::string(width[c] - row[c].size(), ' ');
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace symgame
