#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "torsion_genus/permutation.hpp"

namespace torsion_genus {

/// Default upper bound on N for Clifford-algebra computations (monomial
/// count is 2^N in the worst case).
inline constexpr int kDefaultOracleBound = 10;

/// Exact element of the Clifford algebra on generators e_1..e_N with
/// relations e_i e_k = -e_k e_i (i != k) and e_i^2 = -1. Monomials are
/// index subsets stored as bitmasks in canonical ascending order; all
/// coefficients are exact integers.
class CliffordElement {
public:
  using Mask = std::uint32_t;

  CliffordElement() = default;

  static CliffordElement scalar(mpz_class c);
  /// The vector e_a - e_b (the unnormalized lift of a transposition).
  static CliffordElement transposition_vector(int a, int b);

  const std::map<Mask, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  void add_term(Mask m, const mpz_class& c);

  CliffordElement operator+(const CliffordElement& o) const;
  CliffordElement operator-(const CliffordElement& o) const;
  CliffordElement operator-() const;
  CliffordElement operator*(const CliffordElement& o) const;

  bool operator==(const CliffordElement& o) const { return terms_ == o.terms_; }

  std::string str() const;

private:
  std::map<Mask, mpz_class> terms_;
};

/// Product of transposition vectors over a minimal word for g. Well defined
/// up to global sign and a scale 2^{L/2}, both of which cancel in every
/// commutator sign.
CliffordElement lift(const Permutation& g, int oracle_bound = kDefaultOracleBound);

/// Ground-truth discrete-torsion phase: the sign s with
/// lift(g)*lift(h) = s*lift(h)*lift(g), compared exactly termwise.
/// Requires gh = hg.
int delta_oracle(const Permutation& g, const Permutation& h,
                 int oracle_bound = kDefaultOracleBound);

struct PresentationCheck {
  std::string relation;
  bool holds = false;
};

struct PresentationReport {
  int n = 0;
  std::vector<PresentationCheck> checks;
  bool all_hold() const;
};

/// Exact verification of the double-cover presentation on the lifted
/// adjacent transpositions t_i = e_i - e_{i+1}: t_i^2 = z (as -2 before
/// scale normalization), the braid relation, and z-commutation of distant
/// generators.
PresentationReport verify_presentation(int n);

}  // namespace torsion_genus
