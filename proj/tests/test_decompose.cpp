#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/test_support.hpp"
#include "symgame/decompose.hpp"
#include "symgame/stp.hpp"

using namespace symgame;
using symgame::testing::Rng;

namespace {

const GameSpec kGrid[] = {GameSpec(2, 2), GameSpec(2, 3), GameSpec(3, 2), GameSpec(3, 3),
                          GameSpec(4, 2)};

bool pairwise_orthogonal(const Decomposition& d) {
  const Matrix s = d.symmetric_part.concatenated();
  const Matrix k = d.skew_part.concatenated();
  const Matrix e = d.asymmetric_part.concatenated();
  return inner_product(s, k).is_zero() && inner_product(s, e).is_zero() &&
         inner_product(k, e).is_zero();
}

}  // namespace

TEST_SUITE("decompose") {

TEST_CASE("golden decomposition of the basis-vector game") {
  const FiniteGame g = testing::basis_vector_game_32();
  const Decomposition d = decompose(g);

  REQUIRE(d.skew_coords.size() == 2);
  CHECK(d.skew_coords[0] == Rational(-1, 6));
  CHECK(d.skew_coords[1] == Rational(0));
  REQUIRE(d.symmetric_coords.size() == 6);
  const Rational expect_x2[] = {0, 0, Rational(1, 6), 0, Rational(2, 3), 0};
  for (int i = 0; i < 6; ++i) CHECK(d.symmetric_coords[static_cast<std::size_t>(i)] == expect_x2[i]);

  const Rational s6 = Rational(1, 6), t3 = Rational(2, 3), m3 = Rational(1, 3);
  CHECK(d.skew_part.row(1) == Matrix{{0, -s6, s6, 0, 0, 0, 0, 0}});
  CHECK(d.skew_part.row(2) == Matrix{{0, s6, 0, 0, -s6, 0, 0, 0}});
  CHECK(d.skew_part.row(3) == Matrix{{0, 0, -s6, 0, s6, 0, 0, 0}});
  CHECK(d.symmetric_part.row(1) == Matrix{{0, s6, s6, t3, 0, 0, 0, 0}});
  CHECK(d.symmetric_part.row(2) == Matrix{{0, s6, 0, 0, s6, t3, 0, 0}});
  CHECK(d.symmetric_part.row(3) == Matrix{{0, 0, s6, 0, s6, 0, t3, 0}});
  CHECK(d.asymmetric_part.row(1) == Matrix{{0, 0, t3, -t3, 0, 0, 0, 0}});
  CHECK(d.asymmetric_part.row(2) == Matrix{{0, -m3, 0, 0, 0, m3, 0, 0}});
  CHECK(d.asymmetric_part.row(3) == Matrix{{0, 0, 0, 0, -m3, 0, m3, 0}});

  CHECK(pairwise_orthogonal(d));
  const ClassifyReport report = classify(g);
  CHECK(report.asymmetric_dim == 16);
  CHECK(report.skew_dim == 2);
  CHECK(report.symmetric_dim == 6);
  CHECK_FALSE(report.pure_symmetric);
  CHECK_FALSE(report.pure_skew);
  CHECK_FALSE(report.pure_asymmetric);
  CHECK(report.skew_norm2 == Rational(1, 6));       // (1/6)^2 * 3!
  CHECK(report.symmetric_norm2 == Rational(3, 2));  // (1/6)^2*6 + (2/3)^2*3
}

TEST_CASE("reconstruction, orthogonality, idempotence, linearity") {
  Rng rng(777);
  for (const GameSpec& spec : kGrid) {
    for (int trial = 0; trial < 8; ++trial) {
      const FiniteGame g = testing::random_game(rng, spec);
      const Decomposition d = decompose(g);
      const Matrix v = g.structure().concatenated();

      CHECK(d.symmetric_part.concatenated() + d.skew_part.concatenated() +
                d.asymmetric_part.concatenated() ==
            v);
      CHECK(pairwise_orthogonal(d));

      // projections are idempotent
      const Decomposition ds = decompose(FiniteGame(spec, d.symmetric_part));
      CHECK(ds.symmetric_part == d.symmetric_part);
      CHECK(ds.skew_part.concatenated().is_zero());
      CHECK(ds.asymmetric_part.concatenated().is_zero());
      const Decomposition dk = decompose(FiniteGame(spec, d.skew_part));
      CHECK(dk.skew_part == d.skew_part);
      CHECK(dk.symmetric_part.concatenated().is_zero());
      CHECK(dk.asymmetric_part.concatenated().is_zero());
      const Decomposition de = decompose(FiniteGame(spec, d.asymmetric_part));
      CHECK(de.asymmetric_part == d.asymmetric_part);
      CHECK(de.symmetric_part.concatenated().is_zero());
      CHECK(de.skew_part.concatenated().is_zero());

      // linearity over a random rational combination
      const FiniteGame g2 = testing::random_game(rng, spec);
      const Decomposition d2 = decompose(g2);
      const Rational a = testing::random_rational(rng), b = testing::random_rational(rng);
      const Matrix mixed = a * v + b * g2.structure().concatenated();
      const Decomposition dm =
          decompose(FiniteGame(spec, StructureVector::from_concatenated(spec, mixed)));
      CHECK(dm.symmetric_part.concatenated() ==
            a * d.symmetric_part.concatenated() + b * d2.symmetric_part.concatenated());
      CHECK(dm.skew_part.concatenated() ==
            a * d.skew_part.concatenated() + b * d2.skew_part.concatenated());
      CHECK(dm.asymmetric_part.concatenated() ==
            a * d.asymmetric_part.concatenated() + b * d2.asymmetric_part.concatenated());
    }
  }
}

TEST_CASE("components land in their subspaces") {
  Rng rng(778);
  for (const GameSpec& spec : {GameSpec(2, 2), GameSpec(3, 2), GameSpec(2, 3), GameSpec(3, 3)}) {
    for (int trial = 0; trial < 5; ++trial) {
      const FiniteGame g = testing::random_game(rng, spec);
      const Decomposition d = decompose(g);
      CHECK(is_symmetric_def(FiniteGame(spec, d.symmetric_part)));
      CHECK(is_skew_def(FiniteGame(spec, d.skew_part)));
      CHECK(is_asymmetric(FiniteGame(spec, d.asymmetric_part)));
    }
  }
}

TEST_CASE("pure members decompose onto themselves") {
  const FiniteGame sym = testing::symmetric_fixture_32(3, -1, Rational(1, 2), 7, 0, 2);
  const Decomposition ds = decompose(sym);
  CHECK(ds.symmetric_part == sym.structure());
  CHECK(ds.skew_part.concatenated().is_zero());
  CHECK(ds.asymmetric_part.concatenated().is_zero());
  CHECK(classify(sym).pure_symmetric);

  const FiniteGame skew = testing::skew_fixture_32(Rational(2, 3), -5);
  const Decomposition dk = decompose(skew);
  CHECK(dk.skew_part == skew.structure());
  CHECK(classify(skew).pure_skew);

  const FiniteGame zero = FiniteGame::zero(GameSpec(3, 2));
  const Decomposition dz = decompose(zero);
  CHECK(dz.symmetric_part.concatenated().is_zero());
  CHECK(dz.skew_part.concatenated().is_zero());
  CHECK(dz.asymmetric_part.concatenated().is_zero());
}

TEST_CASE("skew component vanishes identically when n > kappa + 1") {
  Rng rng(779);
  const GameSpec spec(4, 2);
  for (int trial = 0; trial < 5; ++trial) {
    const Decomposition d = decompose(testing::random_game(rng, spec));
    CHECK(d.skew_coords.empty());
    CHECK(d.skew_part.concatenated().is_zero());
  }
}

TEST_CASE("two player closed form agrees with the projection") {
  Rng rng(780);
  for (int kappa : {2, 3, 4}) {
    const GameSpec spec(2, kappa);
    for (int trial = 0; trial < 10; ++trial) {
      const FiniteGame g = testing::random_game(rng, spec);
      const Decomposition closed = two_player_decompose(g);
      const Decomposition projected = decompose(g);
      CHECK(closed.symmetric_part == projected.symmetric_part);
      CHECK(closed.skew_part == projected.skew_part);
      CHECK(closed.asymmetric_part == projected.asymmetric_part);
      CHECK(closed.skew_coords == projected.skew_coords);
      CHECK(closed.symmetric_coords == projected.symmetric_coords);
      CHECK(closed.asymmetric_part.concatenated().is_zero());  // two-player games split fully
    }
  }
  CHECK_THROWS_AS(two_player_decompose(testing::basis_vector_game_32()), ConstraintError);
}

TEST_CASE("two player closed form in bi-matrix coordinates") {
  Rng rng(781);
  const GameSpec spec(2, 2);
  const Rational alpha = testing::random_rational(rng), beta = testing::random_rational(rng),
                 gamma = testing::random_rational(rng), delta = testing::random_rational(rng),
                 xi = testing::random_rational(rng), eta = testing::random_rational(rng),
                 lambda = testing::random_rational(rng), mu = testing::random_rational(rng);
  const FiniteGame g = FiniteGame::from_payoff_tables(
      spec, {{alpha, gamma, xi, lambda}, {beta, delta, eta, mu}});
  const Decomposition d = two_player_decompose(g);
  const Rational half(1, 2);
  // symmetric part: a = (alpha+beta)/2, b = (gamma+eta)/2, c = (xi+delta)/2, d = (lambda+mu)/2
  CHECK(d.symmetric_part.row(1) ==
        Matrix{{half * (alpha + beta), half * (gamma + eta), half * (xi + delta),
                half * (lambda + mu)}});
  // skew part: a' = (alpha-beta)/2, b' = (gamma-eta)/2, c' = (xi-delta)/2, d' = (lambda-mu)/2
  CHECK(d.skew_part.row(1) ==
        Matrix{{half * (alpha - beta), half * (gamma - eta), half * (xi - delta),
                half * (lambda - mu)}});
  // player 2 sides carry the same parameters transposed (with signs for the skew part)
  CHECK(d.symmetric_part.row(2) ==
        Matrix{{half * (alpha + beta), half * (xi + delta), half * (gamma + eta),
                half * (lambda + mu)}});
  CHECK(d.skew_part.row(2) ==
        Matrix{{-(half * (alpha - beta)), -(half * (xi - delta)), -(half * (gamma - eta)),
                -(half * (lambda - mu))}});
}

}  // TEST_SUITE
