#include <doctest.h>

#include "support/test_support.hpp"
#include "symgame/game.hpp"
#include "symgame/representation.hpp"
#include "symgame/stp.hpp"

using namespace symgame;

namespace {

// stp form of a profile: |x|_j delta_kappa^{x_j}
Matrix stp_form(int kappa, const std::vector<int>& choices) {
  Matrix v = Matrix::basis_column(kappa, choices.front());
  for (std::size_t j = 1; j < choices.size(); ++j)
    v = stp(v, Matrix::basis_column(kappa, choices[j]));
  return v;
}

// all profiles over n players, kappa strategies
std::vector<std::vector<int>> all_profiles(int n, int kappa) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 1);
  while (true) {
    out.push_back(cur);
    int pos = n - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == kappa) cur[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace

TEST_SUITE("representation") {

TEST_CASE("permutation matrix columns") {
  CHECK(permutation_matrix(Permutation::identity(3)) == Matrix::identity(3));
  CHECK(permutation_matrix(Permutation({2, 3, 1})) == Matrix::logical(3, {2, 3, 1}));
  // P_sigma delta_n^i = delta_n^j exactly when sigma(i) = j
  const Permutation sigma({3, 1, 4, 2});
  const Matrix p = permutation_matrix(sigma);
  for (int i = 1; i <= 4; ++i)
    CHECK(p * Matrix::basis_column(4, i) == Matrix::basis_column(4, sigma(i)));
}

TEST_CASE("permutation matrix is a homomorphism, brute force over S_4") {
  const auto s4 = all_permutations(4);
  for (const auto& mu : s4)
    for (const auto& sigma : s4)
      CHECK(permutation_matrix(compose(mu, sigma)) ==
            permutation_matrix(mu) * permutation_matrix(sigma));
}

TEST_CASE("factor projector matrices for two players") {
  CHECK(factor_projector(1, 3, 1) == Matrix::identity(3));
  CHECK(factor_projector(2, 2, 1) == Matrix{{1, 1, 0, 0}, {0, 0, 1, 1}});
  CHECK(factor_projector(2, 2, 2) == Matrix{{1, 0, 1, 0}, {0, 1, 0, 1}});
  CHECK_THROWS_AS(factor_projector(2, 2, 3), std::invalid_argument);
}

TEST_CASE("factor projector extracts each profile component") {
  for (int n : {2, 3}) {
    for (int kappa : {2, 3}) {
      for (const auto& profile : all_profiles(n, kappa)) {
        const Matrix s = stp_form(kappa, profile);
        for (int i = 1; i <= n; ++i)
          CHECK(factor_projector(n, kappa, i) * s ==
                Matrix::basis_column(kappa, profile[static_cast<std::size_t>(i - 1)]));
      }
    }
  }
}

TEST_CASE("stacked projectors convert stp form to stacking form") {
  const int n = 3, kappa = 2;
  std::vector<Matrix> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back(factor_projector(n, kappa, i).materialized());
  const Matrix stack = vcat(blocks);
  for (const auto& profile : all_profiles(n, kappa)) {
    std::vector<Matrix> parts;
    for (int v : profile) parts.push_back(Matrix::basis_column(kappa, v).materialized());
    CHECK(stack * stp_form(kappa, profile) == vcat(parts));
  }
}

TEST_CASE("profile permutation examples") {
  CHECK(profile_permutation(Permutation::identity(2), 2).matrix == Matrix::identity(4));
  CHECK(profile_permutation(Permutation({2, 1}), 2).matrix == swap_matrix(2, 2));
  // sigma = (2 3) on (1,2,1) gives (1,1,2)
  const ProfilePermutation t = profile_permutation(Permutation({1, 3, 2}), 2);
  CHECK(t.matrix * stp_form(2, {1, 2, 1}) == stp_form(2, {1, 1, 2}));
}

TEST_CASE("profile permutation action, exhaustive for S_3") {
  for (int kappa : {2, 3}) {
    for (const auto& sigma : all_permutations(3)) {
      const ProfilePermutation t = profile_permutation(sigma, kappa);
      CHECK(t.matrix.is_permutation());
      const Permutation inv = sigma.inverse();
      for (const auto& profile : all_profiles(3, kappa)) {
        std::vector<int> permuted(3);
        for (int i = 1; i <= 3; ++i)
          permuted[static_cast<std::size_t>(i - 1)] = profile[static_cast<std::size_t>(inv(i) - 1)];
        CHECK(t.matrix * stp_form(kappa, profile) == stp_form(kappa, permuted));
      }
    }
  }
}

TEST_CASE("profile permutation is a homomorphism, exhaustive on S_3") {
  for (int kappa : {2, 3}) {
    const auto s3 = all_permutations(3);
    for (const auto& mu : s3)
      for (const auto& sigma : s3)
        CHECK(profile_permutation(compose(mu, sigma), kappa).matrix ==
              profile_permutation(mu, kappa).matrix * profile_permutation(sigma, kappa).matrix);
  }
}

TEST_CASE("structure representation") {
  CHECK(representation_matrix(Permutation::identity(2), 2) == Matrix::identity(8));
  const auto s3 = all_permutations(3);
  for (const auto& sigma : s3) {
    const Matrix psi = representation_matrix(sigma, 2);
    CHECK(psi * representation_matrix(sigma.inverse(), 2) == Matrix::identity(24));
    CHECK(psi.transpose() * psi == Matrix::identity(24));  // orthogonal
  }
  for (const auto& mu : s3)
    for (const auto& sigma : s3)
      CHECK(representation_matrix(compose(mu, sigma), 2) ==
            representation_matrix(mu, 2) * representation_matrix(sigma, 2));
}

}  // TEST_SUITE
