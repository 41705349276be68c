#include "symgame/basis.hpp"

#include <algorithm>
#include <stdexcept>

#include "symgame/permutation.hpp"
#include "symgame/stp.hpp"

namespace symgame {

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Enumerates tuples of length n-1 over 1..kappa, strict or weak, in
// lexicographic order.
std::vector<std::vector<int>> enumerate_tuples(int length, int kappa, bool strict) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(length));
  auto rec = [&](auto&& self, int pos, int low) -> void {
    if (pos == length) {
      out.push_back(cur);
      return;
    }
    for (int v = low; v <= kappa; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, strict ? v + 1 : v);
    }
  };
  rec(rec, 0, 1);
  return out;
}

long long orbit_size_of(const std::vector<int>& values, int kappa) {
  long long q = factorial(static_cast<int>(values.size()));
  for (int s = 1; s <= kappa; ++s) {
    const long long mult = std::count(values.begin(), values.end(), s);
    q /= factorial(static_cast<int>(mult));
  }
  return q;
}

// 1-based basis index of the profile (strategy, tail...) in R^{kappa^n}.
long long head_profile_index(const GameSpec& spec, int strategy, const std::vector<int>& tail) {
  long long idx = strategy - 1;
  for (int v : tail) idx = idx * spec.strategies + (v - 1);
  return idx + 1;
}

void check_strategy(const GameSpec& spec, int strategy) {
  if (strategy < 1 || strategy > spec.strategies)
    throw ConstraintError("basis row: strategy out of range");
}

// The chain W_{[kappa^{i-2}, kappa]} |x| W_{[kappa, kappa^{i-1}]} acting on
// stp-form profiles as the transposition of players 1 and i.
Matrix player_swap_chain(const GameSpec& spec, int player) {
  const int kappa = spec.strategies;
  long long left = 1;
  for (int j = 0; j < player - 2; ++j) left *= kappa;
  return stp(swap_matrix(static_cast<int>(left), kappa),
             swap_matrix(kappa, static_cast<int>(left * kappa)));
}

}  // namespace

std::vector<StrictTuple> strict_tuples(const GameSpec& spec) {
  std::vector<StrictTuple> out;
  for (auto& v : enumerate_tuples(spec.players - 1, spec.strategies, true))
    out.push_back(StrictTuple{std::move(v)});
  return out;
}

std::vector<WeakTuple> weak_tuples(const GameSpec& spec) {
  std::vector<WeakTuple> out;
  for (auto& v : enumerate_tuples(spec.players - 1, spec.strategies, false)) {
    const long long q = orbit_size_of(v, spec.strategies);
    out.push_back(WeakTuple{std::move(v), q});
  }
  return out;
}

std::vector<std::vector<int>> tuple_rearrangements(const WeakTuple& t) {
  std::vector<int> cur = t.values;
  std::sort(cur.begin(), cur.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long skew_dimension(const GameSpec& spec) {
  return spec.strategies * binomial(spec.strategies, spec.players - 1);
}

long long symmetric_dimension(const GameSpec& spec) {
  return spec.strategies * binomial(spec.players + spec.strategies - 2, spec.players - 1);
}

long long asymmetric_dimension(const GameSpec& spec) {
  return spec.structure_length() - symmetric_dimension(spec) - skew_dimension(spec);
}

Matrix skew_basis_row(const GameSpec& spec, const StrictTuple& z, int strategy) {
  check_strategy(spec, strategy);
  if (static_cast<int>(z.values.size()) != spec.players - 1)
    throw ConstraintError("skew_basis_row: tuple length must be n-1");
  std::vector<Rational> row(static_cast<std::size_t>(spec.profile_count()));
  std::vector<int> tail(z.values.size());
  for (const Permutation& sigma : all_permutations(spec.players - 1)) {
    for (std::size_t t = 0; t < tail.size(); ++t)
      tail[t] = z.values[static_cast<std::size_t>(sigma(static_cast<int>(t) + 1) - 1)];
    row[static_cast<std::size_t>(head_profile_index(spec, strategy, tail) - 1)] += Rational(sigma.sign());
  }
  return Matrix::row_vector(std::move(row));
}

Matrix symmetric_basis_row(const GameSpec& spec, const WeakTuple& z, int strategy) {
  check_strategy(spec, strategy);
  if (static_cast<int>(z.values.size()) != spec.players - 1)
    throw ConstraintError("symmetric_basis_row: tuple length must be n-1");
  std::vector<Rational> row(static_cast<std::size_t>(spec.profile_count()));
  for (const auto& tail : tuple_rearrangements(z))
    row[static_cast<std::size_t>(head_profile_index(spec, strategy, tail) - 1)] = Rational(1);
  return Matrix::row_vector(std::move(row));
}

BasisMatrix skew_player1_basis(const GameSpec& spec) {
  const auto tuples = strict_tuples(spec);
  std::vector<Matrix> rows;
  std::vector<std::pair<int, int>> labels;
  for (std::size_t i = 0; i < tuples.size(); ++i)
    for (int j = 1; j <= spec.strategies; ++j) {
      rows.push_back(skew_basis_row(spec, tuples[i], j));
      labels.emplace_back(static_cast<int>(i) + 1, j);
    }
  Matrix mat = rows.empty() ? Matrix(0, static_cast<int>(spec.profile_count())) : vcat(rows);
  return BasisMatrix{BasisKind::skew_head, std::move(mat), std::move(labels)};
}

BasisMatrix skew_basis(const GameSpec& spec) {
  BasisMatrix head = skew_player1_basis(spec);
  std::vector<Matrix> blocks;
  blocks.push_back(head.mat);
  for (int i = 2; i <= spec.players; ++i)
    blocks.push_back(-stp(head.mat, player_swap_chain(spec, i)));
  Matrix mat = head.mat.rows() == 0 ? Matrix(0, static_cast<int>(spec.structure_length()))
                                    : hcat(blocks);
  return BasisMatrix{BasisKind::skew, std::move(mat), std::move(head.labels)};
}

BasisMatrix symmetric_player1_basis(const GameSpec& spec) {
  const auto tuples = weak_tuples(spec);
  std::vector<Matrix> rows;
  std::vector<std::pair<int, int>> labels;
  for (std::size_t i = 0; i < tuples.size(); ++i)
    for (int j = 1; j <= spec.strategies; ++j) {
      rows.push_back(symmetric_basis_row(spec, tuples[i], j));
      labels.emplace_back(static_cast<int>(i) + 1, j);
    }
  return BasisMatrix{BasisKind::symmetric_head, vcat(rows), std::move(labels)};
}

BasisMatrix symmetric_basis(const GameSpec& spec) {
  BasisMatrix head = symmetric_player1_basis(spec);
  std::vector<Matrix> blocks;
  blocks.push_back(head.mat);
  long long left = 1;
  for (int i = 2; i <= spec.players; ++i) {
    left *= spec.strategies;
    blocks.push_back(stp(head.mat, swap_matrix(static_cast<int>(left), spec.strategies)));
  }
  return BasisMatrix{BasisKind::symmetric, hcat(blocks), std::move(head.labels)};
}

BasisMatrix combined_basis(const GameSpec& spec) {
  BasisMatrix d = skew_basis(spec);
  BasisMatrix e = symmetric_basis(spec);
  std::vector<std::pair<int, int>> labels = d.labels;
  labels.insert(labels.end(), e.labels.begin(), e.labels.end());
  return BasisMatrix{BasisKind::combined, vcat({d.mat, e.mat}), std::move(labels)};
}

Matrix gram_matrix(const BasisMatrix& basis) {
  const Matrix m = basis.mat.materialized();
  const int rows = m.rows(), cols = m.cols();
  std::vector<Rational> entries(static_cast<std::size_t>(rows) * rows);
  const auto& d = m.dense_entries();
  for (int i = 0; i < rows; ++i)
    for (int j = i; j < rows; ++j) {
      Rational sum(0);
      for (int c = 0; c < cols; ++c) {
        const Rational& a = d[static_cast<std::size_t>(i) * cols + c];
        if (a.is_zero()) continue;
        const Rational& b = d[static_cast<std::size_t>(j) * cols + c];
        if (b.is_zero()) continue;
        sum += a * b;
      }
      entries[static_cast<std::size_t>(i) * rows + j] = sum;
      entries[static_cast<std::size_t>(j) * rows + i] = std::move(sum);
    }
  return Matrix(rows, rows, std::move(entries));
}

}  // namespace symgame
