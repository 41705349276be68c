#pragma once

#include <string>
#include <vector>

namespace symgame {

/// Element of the symmetric group S_n in one-line notation:
/// map[i-1] = sigma(i), 1-based values.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  /// The transposition exchanging a and b (a != b), identity elsewhere.
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const;  // sigma(i), 1-based

  /// Parity as +1 / -1; multiplicative under composition.
  int sign() const;

  Permutation inverse() const;
  bool is_identity() const;

  const std::vector<int>& one_line() const { return map_; }
  std::string str() const;  // e.g. "(2 3 1)"

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.map_ == b.map_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

 private:
  std::vector<int> map_;
};

/// (mu o sigma)(i) = mu(sigma(i)); both must have the same size.
Permutation compose(const Permutation& mu, const Permutation& sigma);

/// All n! permutations in lexicographic one-line order. Guarded to n <= 9.
std::vector<Permutation> all_permutations(int n);

/// The transpositions (1,i), 1 < i <= n, which generate S_n.
std::vector<Permutation> generator_transpositions(int n);

}  // namespace symgame
