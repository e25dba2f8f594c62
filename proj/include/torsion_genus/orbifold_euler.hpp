#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "torsion_genus/delta.hpp"
#include "torsion_genus/genus_table.hpp"

namespace torsion_genus {

/// A commuting pair of permutations together with the orbit count of the
/// subgroup they generate; for product actions the fixed locus of the pair
/// is a diagonal copy per orbit, so its Euler number is e_x^orbit_count.
struct CommutingPair {
  Permutation f;
  Permutation g;
  int orbit_count = 0;

  static CommutingPair make(Permutation f, Permutation g);
};

/// Phase-weighted orbifold Euler characteristic of the N-th symmetric power
/// of a space with Euler number e_x, by commuting-pair enumeration over
/// class representatives and their centralizers:
///   (1/N!) sum_{[g]} |[g]| sum_{h in C(g)} delta(g,h) e_x^{orbits(<g,h>)}.
/// The trivial provider recovers the plain orbifold Euler characteristic.
mpq_class euler_torsion(int n, std::int64_t e_x, DeltaProvider provider,
                        int oracle_bound = kDefaultOracleBound);

struct EulerRow {
  int n = 0;
  mpq_class brute_force;
  mpz_class series_coefficient;
  bool match = false;
};

struct EulerCrosscheckReport {
  DeltaProvider provider = DeltaProvider::rules;
  bool twisted_series = false;
  /// Exact agreement is the contract for rules/trivial; the oracle rows are
  /// informational (convention comparison).
  bool expected_exact = true;
  std::int64_t e_x = 0;
  std::vector<EulerRow> rows;
  bool all_match = true;
};

/// Compares euler_torsion against the q:=0, y:=1 specialization of the
/// symmetric-product series built from the table: twisted series for the
/// rules and oracle providers, untwisted for trivial.
EulerCrosscheckReport euler_crosscheck(const GenusTable& table, int n_max, DeltaProvider provider,
                                       int oracle_bound = kDefaultOracleBound);

}  // namespace torsion_genus
