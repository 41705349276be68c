#include "symgame/representation.hpp"

#include <stdexcept>

#include "symgame/stp.hpp"

namespace symgame {

namespace {

long long checked_pow(int base, int exp) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > (1LL << 31)) throw std::invalid_argument("profile space too large");
  }
  return v;
}

}  // namespace

Matrix permutation_matrix(const Permutation& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) cols[static_cast<std::size_t>(i - 1)] = p(i);
  return Matrix::logical(p.size(), std::move(cols));
}

Matrix factor_projector(int players, int kappa, int player) {
  if (players < 1 || kappa < 1) throw std::invalid_argument("factor_projector: bad dimensions");
  if (player < 1 || player > players) throw std::invalid_argument("factor_projector: player out of range");
  const int before = static_cast<int>(checked_pow(kappa, player - 1));
  const int after = static_cast<int>(checked_pow(kappa, players - player));
  return kron(kron(Matrix::ones_row(before), Matrix::identity(kappa)), Matrix::ones_row(after));
}

ProfilePermutation profile_permutation(const Permutation& p, int kappa) {
  const int n = p.size();
  const Permutation inv = p.inverse();
  Matrix t = factor_projector(n, kappa, inv(1));
  for (int i = 2; i <= n; ++i) t = khatri_rao(t, factor_projector(n, kappa, inv(i)));
  return ProfilePermutation{n, kappa, std::move(t)};
}

Matrix representation_matrix(const Permutation& p, int kappa) {
  const Matrix t = profile_permutation(p, kappa).matrix;
  if (p.sign() > 0) return kron(permutation_matrix(p), t);
  return kron(permutation_matrix(p), Rational(-1) * t);
}

}  // namespace symgame
