// Command-line front end: verification, basis construction, dimension
// reports, decomposition, and table rendering over .game.json files.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "symgame/basis.hpp"
#include "symgame/decompose.hpp"
#include "symgame/game_io.hpp"
#include "symgame/symmetry.hpp"

namespace {

using namespace symgame;

constexpr int kExitMalformedInput = 1;
constexpr int kExitConstraintViolation = 2;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_witness(std::ostream& os, const char* kind, const Witness& w) {
  os << "  " << kind << " violated at sigma=" << w.sigma.str()
     << " profile=" << w.profile.str() << " player=" << w.player << "\n";
}

int run_verify(const std::string& path, bool with_witness) {
  const FiniteGame game = load_game_file(path);
  const SymmetryVerdict verdict = classify_symmetry(game, with_witness);
  std::cout << "symmetric: " << yes_no(verdict.symmetric) << "\n"
            << "skew-symmetric: " << yes_no(verdict.skew) << "\n"
            << "asymmetric: " << yes_no(verdict.asymmetric) << "\n";
  if (with_witness) {
    if (verdict.symmetric_witness) print_witness(std::cout, "symmetry", *verdict.symmetric_witness);
    if (verdict.skew_witness) print_witness(std::cout, "skew-symmetry", *verdict.skew_witness);
  }
  return 0;
}

void print_dims(const GameSpec& spec) {
  std::cout << "ℓ=" << binomial(spec.strategies, spec.players - 1)
            << " β=" << skew_dimension(spec)
            << " p=" << binomial(spec.players + spec.strategies - 2, spec.players - 1)
            << " α=" << symmetric_dimension(spec)
            << " dimE=" << asymmetric_dimension(spec) << "\n";
}

int run_dims(int n, int kappa) {
  const GameSpec spec(n, kappa);
  print_dims(spec);
  std::cout << "q:";
  for (const auto& t : weak_tuples(spec)) std::cout << " " << t.orbit_size;
  std::cout << "\n";
  return 0;
}

void print_basis_rows(const char* title, const BasisMatrix& basis) {
  std::cout << title << " (" << basis.mat.rows() << " x " << basis.mat.cols() << ")\n";
  for (int r = 0; r < basis.mat.rows(); ++r) {
    const auto& label = basis.labels[static_cast<std::size_t>(r)];
    std::cout << "  [" << label.first << "," << label.second << "]";
    for (int c = 0; c < basis.mat.cols(); ++c) std::cout << " " << basis.mat.at(r, c);
    std::cout << "\n";
  }
}

int run_basis(int n, int kappa, const std::string& json_path) {
  const GameSpec spec(n, kappa);
  const BasisMatrix d = skew_basis(spec);
  const BasisMatrix e = symmetric_basis(spec);
  print_dims(spec);
  print_basis_rows("D", d);
  print_basis_rows("E", e);

  const BasisMatrix q = combined_basis(spec);
  const Matrix gram = gram_matrix(q);
  bool diagonal = true;
  for (int i = 0; i < gram.rows() && diagonal; ++i)
    for (int j = 0; j < gram.cols() && diagonal; ++j)
      if (i != j && !gram.at(i, j).is_zero()) diagonal = false;
  std::cout << "gram diagonal: " << yes_no(diagonal) << "\n";
  std::cout << "gram diag:";
  for (int i = 0; i < gram.rows(); ++i) std::cout << " " << gram.at(i, i);
  std::cout << "\n";

  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw ParseError("cannot open file for writing: " + json_path);
    auto dump_rows = [&out](const char* key, const BasisMatrix& b, bool last) {
      out << "  \"" << key << "\": [";
      for (int r = 0; r < b.mat.rows(); ++r) {
        out << (r ? ",\n    [" : "\n    [");
        for (int c = 0; c < b.mat.cols(); ++c)
          out << (c ? "," : "") << '"' << b.mat.at(r, c).str() << '"';
        out << "]";
      }
      out << (b.mat.rows() ? "\n  ]" : "]") << (last ? "\n" : ",\n");
    };
    out << "{\n";
    dump_rows("D", d, false);
    dump_rows("E", e, true);
    out << "}\n";
  }
  return 0;
}

int run_render(const std::string& path, int precision, bool exact) {
  const FiniteGame game = load_game_file(path);
  if (!game.name().empty()) std::cout << game.name() << "\n";
  std::cout << render_table(game, precision, exact);
  return 0;
}

std::string output_stem(const std::string& input) {
  static const std::string suffix = ".game.json";
  if (input.size() > suffix.size() &&
      input.compare(input.size() - suffix.size(), suffix.size(), suffix) == 0)
    return input.substr(0, input.size() - suffix.size());
  return input;
}

int run_decompose(const std::string& path, std::string prefix, int precision, bool exact) {
  const FiniteGame game = load_game_file(path);
  const Decomposition parts = decompose(game);
  if (prefix.empty()) prefix = output_stem(path);

  struct Part {
    const char* tag;
    const StructureVector* sv;
  };
  const Part all[] = {{"symmetric", &parts.symmetric_part},
                      {"skew", &parts.skew_part},
                      {"asymmetric", &parts.asymmetric_part}};
  for (const Part& part : all) {
    const std::string out_path = prefix + "." + part.tag + ".game.json";
    const FiniteGame component(game.spec(), *part.sv,
                               game.name().empty() ? part.tag : game.name() + " (" + part.tag + ")");
    save_game_file(component, out_path);
    std::cout << part.tag << " part -> " << out_path << "\n"
              << render_table(component, precision, exact) << "\n";
  }

  std::cout << "X1:";
  for (const auto& c : parts.skew_coords) std::cout << " " << c;
  std::cout << "\nX2:";
  for (const auto& c : parts.symmetric_coords) std::cout << " " << c;
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symmetry analysis and decomposition of finite normal-form games"};
  app.require_subcommand(1);

  std::string input, json_path, prefix;
  int n = 0, kappa = 0, precision = 4;
  bool with_witness = false, exact = false;

  CLI::App* verify = app.add_subcommand("verify", "Check symmetry / skew-symmetry / asymmetry of a game");
  verify->add_option("input", input, "game file (.game.json)")->required();
  verify->add_flag("--witness", with_witness, "report first violating (sigma, profile, player)");

  CLI::App* basis = app.add_subcommand("basis", "Print subspace bases and Gram diagnostics");
  basis->add_option("--n", n, "number of players")->required();
  basis->add_option("--kappa", kappa, "strategies per player")->required();
  basis->add_option("--json", json_path, "write bases as JSON (exact rationals)");

  CLI::App* dims = app.add_subcommand("dims", "Print subspace dimensions");
  dims->add_option("--n", n, "number of players")->required();
  dims->add_option("--kappa", kappa, "strategies per player")->required();

  CLI::App* decomp = app.add_subcommand("decompose", "Split a game into symmetric + skew + asymmetric parts");
  decomp->add_option("input", input, "game file (.game.json)")->required();
  decomp->add_option("--out-prefix", prefix, "output file prefix (default: input without .game.json)");
  decomp->add_option("--precision", precision, "table decimal digits (1..12)")->check(CLI::Range(1, 12));
  decomp->add_flag("--exact", exact, "render tables as exact rationals");

  CLI::App* render = app.add_subcommand("render", "Pretty-print a game as a payoff table");
  render->add_option("input", input, "game file (.game.json)")->required();
  render->add_option("--precision", precision, "table decimal digits (1..12)")->check(CLI::Range(1, 12));
  render->add_flag("--exact", exact, "render entries as exact rationals");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(input, with_witness);
    if (basis->parsed()) return run_basis(n, kappa, json_path);
    if (dims->parsed()) return run_dims(n, kappa);
    if (decomp->parsed()) return run_decompose(input, prefix, precision, exact);
    if (render->parsed()) return run_render(input, precision, exact);
  } catch (const ConstraintError& e) {
    std::cerr << "constraint violation: " << e.what() << "\n";
    return kExitConstraintViolation;
  } catch (const ParseError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitMalformedInput;
  }
  return 0;
}
