#include "torsion_genus/sectors.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <stdexcept>

namespace torsion_genus {

SectorSeries sector_series(const GenusTable& table, int j, Frac q_max) {
  if (j < 1) throw std::invalid_argument("sector order must be positive");
  SectorSeries s;
  s.j = j;
  Truncation window(0, q_max);
  s.plus_part = IntSeries(window, 1);
  s.minus_part = IntSeries(window, 2);
  for (const auto& [key, c] : table.entries) {
    Frac q_exp = key.first / Frac(j);
    if (q_exp > q_max) continue;
    if (q_exp.is_integer()) {
      s.plus_part.add_term(exp_qy(q_exp, key.second), mpz_class(c));
    } else if (q_exp.den() == 2) {
      // Only reachable for even j.
      s.minus_part.add_term(exp_qy(q_exp, key.second), mpz_class(c));
    }
  }
  return s;
}

SectorAverageReport sector_average_numeric(const GenusTable& table, int j, bool signed_variant,
                                           Frac q_max, std::size_t samples, double tolerance) {
  if (j < 1) throw std::invalid_argument("sector order must be positive");
  if (signed_variant && j % 2 != 0)
    throw std::invalid_argument("signed sector average requires even order");
  SectorAverageReport report;
  report.j = j;
  report.signed_variant = signed_variant;
  report.tolerance = tolerance;

  // (1/j) sum_r (+-1)^r Ell(q^{1/j} xi^r, y) with xi = exp(2 pi i / j).
  ComplexSeries average(Truncation(0, q_max), j);
  for (const auto& [key, c] : table.entries) {
    Frac q_exp = key.first / Frac(j);
    if (q_exp > q_max) continue;
    std::complex<double> weight = 0.0;
    for (int r = 0; r < j; ++r) {
      double angle = 2.0 * std::numbers::pi * key.first.to_double() * r / j;
      std::complex<double> root(std::cos(angle), std::sin(angle));
      weight += (signed_variant && (r & 1)) ? -root : root;
    }
    weight /= static_cast<double>(j);
    average.add_term(exp_qy(q_exp, key.second), weight * static_cast<double>(c));
  }

  const IntSeries& exact =
      signed_variant ? sector_series(table, j, q_max).minus_part
                     : sector_series(table, j, q_max).plus_part;

  // Every surviving exponent of the numeric average must be matched by the
  // exact extraction, including exponents where the average should have
  // cancelled to zero.
  std::set<ExponentVector> exponents;
  for (const auto& [e, v] : average.terms()) exponents.insert(e);
  for (const auto& [e, v] : exact.terms()) exponents.insert(e);

  for (const auto& e : exponents) {
    if (samples > 0 && report.compared >= samples) break;
    double expected = coefficient_at(exact, e).get_d();
    std::complex<double> got = coefficient_at(average, e);
    double err = std::abs(got - expected) / std::max(1.0, std::abs(expected));
    report.max_abs_error = std::max(report.max_abs_error, err);
    ++report.compared;
  }
  report.pass = report.max_abs_error <= tolerance;
  return report;
}

}  // namespace torsion_genus
