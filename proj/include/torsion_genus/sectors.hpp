#pragma once

#include <cstddef>

#include "torsion_genus/genus_table.hpp"
#include "torsion_genus/series.hpp"

namespace torsion_genus {

/// Supertrace series of the length-j twisted sector: the plus part selects
/// table rows with j | m and divides the q-exponent by j; the minus part
/// (nonempty only for even j) collects the rows landing on half-integer
/// q-exponents.
struct SectorSeries {
  int j = 1;
  IntSeries plus_part;
  IntSeries minus_part;

  SectorSeries() : plus_part(Truncation(0, Frac(0))), minus_part(Truncation(0, Frac(0))) {}
};

SectorSeries sector_series(const GenusTable& table, int j, Frac q_max);

struct SectorAverageReport {
  int j = 0;
  bool signed_variant = false;
  std::size_t compared = 0;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Numerically averages the genus over j-th roots of unity (with the
/// alternating sign for the minus variant) and compares against the exact
/// sector extraction. The root of unity appears nowhere else in the
/// library.
SectorAverageReport sector_average_numeric(const GenusTable& table, int j, bool signed_variant,
                                           Frac q_max, std::size_t samples = 0,
                                           double tolerance = 1e-9);

}  // namespace torsion_genus
