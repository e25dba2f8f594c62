#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace torsion_genus {

/// Permutation of {0,...,n-1} in one-line notation (image array).
/// Printed 1-based in cycle notation.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int n);                       // identity
  explicit Permutation(std::vector<int> images);     // validated

  static Permutation transposition(int n, int a, int b);
  /// Builds a permutation from disjoint cycles given as 0-based vertex lists.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation compose(const Permutation& other) const;  // this after other
  Permutation inverse() const;
  Permutation conjugate_by(const Permutation& k) const;  // k * this * k^{-1}
  bool is_identity() const;
  bool commutes_with(const Permutation& other) const;

  /// Disjoint cycles (including fixed points), each rotated to start at its
  /// smallest element, sorted by decreasing length then by smallest element.
  std::vector<std::vector<int>> cycles() const;

  /// Minimal transposition word realizing the permutation.
  std::vector<std::pair<int, int>> transposition_word() const;

  int parity() const;  // 0 even, 1 odd

  std::string cycle_str() const;  // e.g. "(1 2)(3 4)" or "()" for identity

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

/// Cycle type of an element of S_N: multiplicities a_j of j-cycles.
struct CycleType {
  int n = 0;
  std::vector<int> multiplicity;  // index j in [1, n]; multiplicity[j-1] = a_j

  static CycleType of(const Permutation& g);
  /// Partition parts in decreasing order, e.g. (3,1,1).
  static CycleType from_parts(const std::vector<int>& parts);

  int mult(int j) const { return (j >= 1 && j <= n) ? multiplicity[j - 1] : 0; }
  /// Parity bit: sum of multiplicities of even-length cycles mod 2.
  int parity() const;
  /// Canonical class representative: cycles on consecutive letters, longest
  /// cycles first.
  Permutation representative() const;
  mpz_class centralizer_order() const;
  mpz_class class_size() const;
  std::vector<int> parts() const;
  std::string str() const;

  bool operator==(const CycleType&) const = default;
};

/// All partitions of n as decreasing part lists, in a fixed deterministic
/// order (colexicographic backtracking).
std::vector<std::vector<int>> partitions_of(int n);

mpz_class factorial(int n);

/// Number of orbits of the group generated by commuting f, g on the n points.
int orbit_count(const Permutation& f, const Permutation& g);

/// Enumerates the full centralizer of g, built from cycle rotations and
/// block permutations of same-length cycles. Calls visit for each element;
/// count equals the centralizer order.
void for_each_centralizer_element(const Permutation& g,
                                  const std::function<void(const Permutation&)>& visit);

std::vector<Permutation> centralizer_elements(const Permutation& g);

/// Enumerates all of S_n in lexicographic one-line order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

/// Lexicographic rank of the one-line word among all n! permutations.
std::uint64_t lehmer_rank(const Permutation& g);

}  // namespace torsion_genus
