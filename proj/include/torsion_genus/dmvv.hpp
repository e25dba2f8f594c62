#pragma once

#include <vector>

#include "torsion_genus/genus_table.hpp"
#include "torsion_genus/sectors.hpp"
#include "torsion_genus/series.hpp"

namespace torsion_genus {

/// Per-partition assembly of the symmetric-product generating series: for
/// each N and each partition, supersymmetric powers of the odd-length
/// sector spaces and wedge powers of the even-length ones, the latter
/// switching between the plus and minus sector by class parity in the
/// twisted case. Deliberately avoids the half-sum shortcut used on the
/// product side so the two routes stay independent.
IntSeries direct_orbifold_series(const GenusTable& table, bool twisted, Truncation trunc);

struct FourBlocks {
  IntSeries zpp, zpm, zmp, zmm;

  FourBlocks()
      : zpp(Truncation(0, Frac(0))),
        zpm(Truncation(0, Frac(0))),
        zmp(Truncation(0, Frac(0))),
        zmm(Truncation(0, Frac(0))) {}
};

/// The four infinite-product blocks of the twisted generating function;
/// the last block carries its leading minus sign.
FourBlocks four_blocks(const GenusTable& table, Truncation trunc);

/// Untwisted: prod (1 - p^n q^m y^l)^{-c(nm,l)}. Twisted: half the sum of
/// the four blocks (exact integer division; a remainder is an error).
IntSeries product_formula_series(const GenusTable& table, bool twisted, Truncation trunc);

struct DmvvReport {
  bool twisted = false;
  bool match = false;
  IntSeries direct;
  IntSeries product;
  std::vector<ExponentVector> mismatches;

  DmvvReport() : direct(Truncation(0, Frac(0))), product(Truncation(0, Frac(0))) {}
};

/// Exact termwise comparison of the two routes over the full window.
DmvvReport verify_dmvv(const GenusTable& table, bool twisted, Truncation trunc);

}  // namespace torsion_genus
