#pragma once

#include <vector>

#include "torsion_genus/series.hpp"

namespace torsion_genus {

/// Generating series of supersymmetric powers of a space with superdimension
/// series f(q,y) = sum d(m,l) q^m y^l:
///   prod_{m,l} (1 - p^j q^m y^l)^{-d(m,l)}.
IntSeries sym_generating(const IntSeries& f, int step_j, Truncation trunc);

/// Wedge counterpart with exponent +d(m,l); t_sign = -1 gives the
/// alternating variant prod (1 + p^j q^m y^l)^{d(m,l)}.
IntSeries wedge_generating(const IntSeries& f, int step_j, int t_sign, Truncation trunc);

enum class PowerKind { sym, wedge };

/// Basis vector of an explicit super vector space with commuting semisimple
/// operators: parity in {0,1}, y-eigenvalue and q-eigenvalue.
struct BasisVector {
  int parity = 0;
  Frac y_weight;
  Frac q_weight;
};

struct SuperVectorSpace {
  std::vector<BasisVector> basis;
};

/// Superdimension series sum_{m,l} sdim(V_{m,l}) q^m y^l of the space.
IntSeries superdimension_series(const SuperVectorSpace& space, Frac q_max);

inline constexpr int kBruteDimBound = 6;
inline constexpr int kBruteOrderBound = 4;

/// Independent oracle: realizes the N-th supersymmetric (or wedge) power by
/// projecting V^{tensor N} with the graded (anti)symmetrizer and takes the
/// supertrace of y^A q^B directly, Koszul signs and all. Exact; exponential
/// in N, hence the small bounds.
IntSeries brute_supertrace_symwedge(const SuperVectorSpace& space, int n, PowerKind kind);

}  // namespace torsion_genus
