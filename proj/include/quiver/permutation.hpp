#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace quiver {

/// A bijection of {1, ..., n}.
///
/// Composition is functional: (p * q)(x) = p(q(x)). Acting on the rows of a
/// matrix, p sends row i of M to row p(i) of the result, so that
/// (p * M)_i = M_{p^{-1}(i)} and p * (q * M) = (p * q) * M.
class Permutation {
 public:
  Permutation() = default;

  /// Takes 1-based images: images[x - 1] = p(x). Throws if not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The transposition (a b) on {1..n}; identity when a == b.
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const;
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Disjoint cycle notation, e.g. "(1 2)(3 4)"; the identity prints as "id".
  std::string cycles() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Parses cycle notation as printed by Permutation::cycles ("id", "(1 2)(3 4)").
Permutation parse_cycles(int n, const std::string& text);

/// Calls visit on every permutation of {1..n} in lexicographic image order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

}  // namespace quiver
