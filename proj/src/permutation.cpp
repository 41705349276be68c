#include "symgame/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symgame {

Permutation::Permutation(std::vector<int> one_line) : map_(std::move(one_line)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : map_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("Permutation: not a bijection of 1..n");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 1);
  return Permutation(std::move(m));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b)
    throw std::invalid_argument("Permutation::transposition: bad points");
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 1);
  std::swap(m[static_cast<std::size_t>(a - 1)], m[static_cast<std::size_t>(b - 1)]);
  return Permutation(std::move(m));
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("Permutation: point out of range");
  return map_[static_cast<std::size_t>(i - 1)];
}

int Permutation::sign() const {
  int inversions = 0;
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (map_[static_cast<std::size_t>(i)] > map_[static_cast<std::size_t>(j)]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>(map_[static_cast<std::size_t>(i - 1)] - 1)] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (map_[static_cast<std::size_t>(i - 1)] != i) return false;
  return true;
}

std::string Permutation::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < size(); ++i) os << (i ? " " : "") << map_[static_cast<std::size_t>(i)];
  os << ')';
  return os.str();
}

Permutation compose(const Permutation& mu, const Permutation& sigma) {
  if (mu.size() != sigma.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> m(static_cast<std::size_t>(mu.size()));
  for (int i = 1; i <= mu.size(); ++i) m[static_cast<std::size_t>(i - 1)] = mu(sigma(i));
  return Permutation(std::move(m));
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("all_permutations: n must be in 1..9");
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

std::vector<Permutation> generator_transpositions(int n) {
  std::vector<Permutation> out;
  for (int i = 2; i <= n; ++i) out.push_back(Permutation::transposition(n, 1, i));
  return out;
}

}  // namespace symgame
