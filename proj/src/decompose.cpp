#include "symgame/decompose.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "symgame/basis.hpp"
#include "symgame/stp.hpp"

namespace symgame {

namespace {

// Bases and Gram diagonals per (n, kappa), built once. Diagonality of
// the full Gram matrix is asserted here so the projection below can
// work row by row.
struct BasisPack {
  BasisMatrix skew;
  BasisMatrix symmetric;
  std::vector<Rational> skew_gram;       // <d_i, d_i>
  std::vector<Rational> symmetric_gram;  // <e_i, e_i>
};

const BasisPack& cached_bases(const GameSpec& spec) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<BasisPack>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{spec.players, spec.strategies}];
  if (!slot) {
    const long long rows = skew_dimension(spec) + symmetric_dimension(spec);
    if (rows * rows * spec.structure_length() > 4'000'000'000LL)
      throw ConstraintError("decompose: size guard exceeded (basis Gram too large)");
    auto pack = std::make_unique<BasisPack>(
        BasisPack{skew_basis(spec), symmetric_basis(spec), {}, {}});
    const BasisMatrix combined{
        BasisKind::combined, vcat({pack->skew.mat, pack->symmetric.mat}), {}};
    const Matrix gram = gram_matrix(combined);
    for (int i = 0; i < gram.rows(); ++i)
      for (int j = 0; j < gram.cols(); ++j)
        if (i != j && !gram.at(i, j).is_zero())
          throw std::logic_error("decompose: basis Gram matrix is not diagonal");
    const int beta = pack->skew.rows();
    for (int i = 0; i < gram.rows(); ++i) {
      if (gram.at(i, i).is_zero())
        throw std::logic_error("decompose: basis row with zero norm");
      (i < beta ? pack->skew_gram : pack->symmetric_gram).push_back(gram.at(i, i));
    }
    slot = std::move(pack);
  }
  return *slot;
}

// coords[r] = <v, row_r> / <row_r, row_r>; accumulates coords * rows.
std::vector<Rational> project_coords(const Matrix& v, const BasisMatrix& basis,
                                     const std::vector<Rational>& gram) {
  std::vector<Rational> coords;
  coords.reserve(static_cast<std::size_t>(basis.rows()));
  for (int r = 0; r < basis.rows(); ++r)
    coords.push_back(inner_product(v, basis.mat.row(r)) / gram[static_cast<std::size_t>(r)]);
  return coords;
}

Matrix combine(const std::vector<Rational>& coords, const BasisMatrix& basis, int cols) {
  Matrix acc = Matrix::zero(1, cols);
  for (int r = 0; r < basis.rows(); ++r) {
    if (coords[static_cast<std::size_t>(r)].is_zero()) continue;
    acc = acc + coords[static_cast<std::size_t>(r)] * basis.mat.row(r);
  }
  return acc;
}

}  // namespace

Decomposition decompose(const FiniteGame& g) {
  const GameSpec& spec = g.spec();
  const BasisPack& pack = cached_bases(spec);
  const Matrix v = g.structure().concatenated();
  const int len = static_cast<int>(spec.structure_length());

  std::vector<Rational> x1 = project_coords(v, pack.skew, pack.skew_gram);
  std::vector<Rational> x2 = project_coords(v, pack.symmetric, pack.symmetric_gram);
  const Matrix skew_part = combine(x1, pack.skew, len);
  const Matrix symmetric_part = combine(x2, pack.symmetric, len);
  const Matrix asymmetric_part = v - symmetric_part - skew_part;

  return Decomposition{StructureVector::from_concatenated(spec, symmetric_part),
                       StructureVector::from_concatenated(spec, skew_part),
                       StructureVector::from_concatenated(spec, asymmetric_part),
                       std::move(x1), std::move(x2)};
}

Decomposition two_player_decompose(const FiniteGame& g) {
  const GameSpec& spec = g.spec();
  if (spec.players != 2)
    throw ConstraintError("two_player_decompose: requires a two-player game");
  const int kappa = spec.strategies;
  const Matrix w = swap_matrix(kappa, kappa);
  const Matrix& v1 = g.structure().row(1);
  const Matrix v2w = g.structure().row(2) * w;
  const Rational half(1, 2);
  const Matrix s = half * (v1 + v2w);
  const Matrix k = half * (v1 - v2w);

  const Matrix symmetric_part = hcat({s, s * w});
  const Matrix skew_part = hcat({k, -(k * w)});
  const Matrix asymmetric_part =
      g.structure().concatenated() - symmetric_part - skew_part;

  const BasisPack& pack = cached_bases(spec);
  std::vector<Rational> x1 = project_coords(skew_part, pack.skew, pack.skew_gram);
  std::vector<Rational> x2 = project_coords(symmetric_part, pack.symmetric, pack.symmetric_gram);

  return Decomposition{StructureVector::from_concatenated(spec, symmetric_part),
                       StructureVector::from_concatenated(spec, skew_part),
                       StructureVector::from_concatenated(spec, asymmetric_part),
                       std::move(x1), std::move(x2)};
}

ClassifyReport classify(const FiniteGame& g) {
  Decomposition parts = decompose(g);
  const Matrix v = g.structure().concatenated();
  const Matrix vs = parts.symmetric_part.concatenated();
  const Matrix vk = parts.skew_part.concatenated();
  const Matrix ve = parts.asymmetric_part.concatenated();
  ClassifyReport report{std::move(parts),
                        inner_product(vs, vs),
                        inner_product(vk, vk),
                        inner_product(ve, ve),
                        vs == v,
                        vk == v,
                        ve == v,
                        classify_symmetry(g),
                        symmetric_dimension(g.spec()),
                        skew_dimension(g.spec()),
                        asymmetric_dimension(g.spec())};
  return report;
}

}  // namespace symgame
