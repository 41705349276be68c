#include "symgame/symmetry.hpp"

#include "symgame/basis.hpp"
#include "symgame/representation.hpp"
#include "symgame/stp.hpp"

namespace symgame {

namespace {

constexpr long long kDefCheckGuard = 200'000'000;
constexpr long long kRepresentationGuard = 200'000'000;  // |scope| * n*kappa^n

std::vector<Permutation> scope_permutations(int n, CheckScope scope) {
  return scope == CheckScope::full_group ? all_permutations(n)
                                         : generator_transpositions(n);
}

// Shared quantifier loop of Definition-style checks: verifies
// c_i(x) = factor(sigma) * c_{sigma(i)}(x_{sigma^{-1}(1)}, ..., x_{sigma^{-1}(n)})
// over the requested scope. `signed_check` selects factor = sign(sigma).
bool definition_check(const FiniteGame& g, bool signed_check, Witness* witness,
                      CheckScope scope) {
  const GameSpec& spec = g.spec();
  const int n = spec.players;
  const long long profiles = spec.profile_count();
  const auto sigmas = scope_permutations(n, scope);
  const long long cases = static_cast<long long>(sigmas.size()) * profiles * n;
  if (cases > kDefCheckGuard)
    throw ConstraintError("definition check: size guard exceeded (n! * kappa^n * n too large)");

  std::vector<int> permuted(static_cast<std::size_t>(n));
  for (const Permutation& sigma : sigmas) {
    const Permutation inv = sigma.inverse();
    for (long long k = 1; k <= profiles; ++k) {
      const StrategyProfile x = profile_at(spec, k);
      for (int j = 1; j <= n; ++j)
        permuted[static_cast<std::size_t>(j - 1)] = x.choice(inv(j));
      const StrategyProfile y{permuted};
      const long long yk = profile_index(spec, y);
      for (int i = 1; i <= n; ++i) {
        Rational rhs = g.structure().row(sigma(i)).at(0, static_cast<int>(yk) - 1);
        if (signed_check && sigma.sign() < 0) rhs = -rhs;
        if (g.structure().row(i).at(0, static_cast<int>(k) - 1) != rhs) {
          if (witness) *witness = Witness{sigma, x, i};
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool is_symmetric_def(const FiniteGame& g, Witness* witness, CheckScope scope) {
  return definition_check(g, false, witness, scope);
}

bool is_skew_def(const FiniteGame& g, Witness* witness, CheckScope scope) {
  return definition_check(g, true, witness, scope);
}

bool is_skew_matrix_cond(const FiniteGame& g) {
  const GameSpec& spec = g.spec();
  const int n = spec.players;
  const int kappa = spec.strategies;
  const Matrix& v1 = g.structure().row(1);

  // each payoff block must be the signed player-1/player-i relabeling of V^c_1
  long long left = 1;  // kappa^{i-2}
  for (int i = 2; i <= n; ++i) {
    const Matrix chain = stp(swap_matrix(static_cast<int>(left), kappa),
                             swap_matrix(kappa, static_cast<int>(left) * kappa));
    if (g.structure().row(i) != -stp(v1, chain)) return false;
    left *= kappa;
  }
  if (n == 2) return true;

  // V^c_1 must cancel against its own tail transpositions; the bracket
  // I + chain (x) I is applied in distributed form to keep the swap
  // chain in index form.
  long long inner = 1;  // kappa^{i-3}
  for (int i = 3; i <= n; ++i) {
    const Matrix chain = stp(swap_matrix(static_cast<int>(inner) * kappa, kappa),
                             swap_matrix(kappa, static_cast<int>(inner)));
    for (int s = 1; s <= kappa; ++s) {
      const Matrix head = stp(v1, Matrix::basis_column(kappa, s));  // 1 x kappa^{n-1}
      if (!(head + stp(head, chain)).is_zero()) return false;
    }
    inner *= kappa;
  }
  return true;
}

bool is_symmetric_matrix_cond(const FiniteGame& g) {
  const GameSpec& spec = g.spec();
  const int n = spec.players;
  const int kappa = spec.strategies;
  const Matrix& v1 = g.structure().row(1);

  long long mid = 1;  // kappa^{s-2}
  for (int s = 2; s <= n - 1; ++s) {
    const Matrix chain = stp(swap_matrix(static_cast<int>(mid), kappa),
                             swap_matrix(kappa, static_cast<int>(mid) * kappa));
    if (stp(v1, kron(Matrix::identity(kappa), chain)) != v1) return false;
    mid *= kappa;
  }
  long long left = kappa;  // kappa^{i-1}
  for (int i = 2; i <= n; ++i) {
    if (g.structure().row(i) != stp(v1, swap_matrix(static_cast<int>(left), kappa)))
      return false;
    left *= kappa;
  }
  return true;
}

bool is_representation_invariant(const FiniteGame& g, CheckScope scope) {
  const GameSpec& spec = g.spec();
  const auto sigmas = scope_permutations(spec.players, scope);
  if (static_cast<long long>(sigmas.size()) * spec.structure_length() > kRepresentationGuard)
    throw ConstraintError("representation check: size guard exceeded");
  const Matrix v = g.structure().concatenated();
  for (const Permutation& sigma : sigmas) {
    // V_G (P (x) sign T) with the sign factored out, so the product is
    // an index shuffle regardless of parity
    const Matrix shuffled =
        v * kron(permutation_matrix(sigma), profile_permutation(sigma, spec.strategies).matrix);
    const Matrix image = sigma.sign() > 0 ? shuffled : -shuffled;
    if (image != v) return false;
  }
  return true;
}

bool is_zero_sum(const FiniteGame& g) {
  Matrix total = g.structure().row(1);
  for (int i = 2; i <= g.spec().players; ++i) total = total + g.structure().row(i);
  return total.is_zero();
}

bool is_asymmetric(const FiniteGame& g) {
  const Matrix v = g.structure().concatenated();
  const BasisMatrix q = combined_basis(g.spec());
  for (int r = 0; r < q.rows(); ++r)
    if (!inner_product(v, q.mat.row(r)).is_zero()) return false;
  return true;
}

SymmetryVerdict classify_symmetry(const FiniteGame& g, bool with_witnesses) {
  SymmetryVerdict verdict;
  verdict.symmetric = is_symmetric_matrix_cond(g);
  verdict.skew = is_skew_matrix_cond(g);
  verdict.asymmetric = is_asymmetric(g);
  if (with_witnesses) {
    Witness w{Permutation::identity(g.spec().players), StrategyProfile{}, 0};
    if (!verdict.symmetric && !is_symmetric_def(g, &w)) verdict.symmetric_witness = w;
    if (!verdict.skew && !is_skew_def(g, &w)) verdict.skew_witness = w;
  }
  return verdict;
}

}  // namespace symgame
