#include "torsion_genus/orbifold_euler.hpp"

#include "torsion_genus/dmvv.hpp"
#include "torsion_genus/permutation.hpp"

namespace torsion_genus {

CommutingPair CommutingPair::make(Permutation f, Permutation g) {
  if (!f.commutes_with(g)) throw std::invalid_argument("pair does not commute");
  CommutingPair pair;
  pair.orbit_count = torsion_genus::orbit_count(f, g);
  pair.f = std::move(f);
  pair.g = std::move(g);
  return pair;
}

mpq_class euler_torsion(int n, std::int64_t e_x, DeltaProvider provider, int oracle_bound) {
  if (n < 0) throw std::invalid_argument("symmetric power order must be nonnegative");
  if (n == 0) return 1;
  mpz_class base(static_cast<long>(e_x));
  std::vector<mpz_class> powers(n + 1);
  powers[0] = 1;
  for (int k = 1; k <= n; ++k) powers[k] = powers[k - 1] * base;

  mpz_class total = 0;
  for (const auto& parts : partitions_of(n)) {
    CycleType ct = CycleType::from_parts(parts);
    Permutation g = ct.representative();
    mpz_class class_sum = 0;
    for_each_centralizer_element(g, [&](const Permutation& h) {
      CommutingPair pair = CommutingPair::make(g, h);
      int sign = delta(g, h, provider, oracle_bound);
      class_sum += sign > 0 ? powers[pair.orbit_count] : -powers[pair.orbit_count];
    });
    total += ct.class_size() * class_sum;
  }
  mpq_class result(total, factorial(n));
  result.canonicalize();
  return result;
}

EulerCrosscheckReport euler_crosscheck(const GenusTable& table, int n_max, DeltaProvider provider,
                                       int oracle_bound) {
  EulerCrosscheckReport report;
  report.provider = provider;
  report.twisted_series = provider != DeltaProvider::trivial;
  report.expected_exact = provider != DeltaProvider::oracle;
  report.e_x = euler_number(table);

  Truncation trunc(n_max, table.entries.empty() ? Frac(0) : table.entries.rbegin()->first.first);
  IntSeries series = direct_orbifold_series(table, report.twisted_series, trunc);
  IntSeries euler_series = specialize_y1(specialize_q0(series));

  for (int n = 0; n <= n_max; ++n) {
    EulerRow row;
    row.n = n;
    row.brute_force = euler_torsion(n, report.e_x, provider, oracle_bound);
    row.series_coefficient = coefficient_at(euler_series, exp_p(n));
    row.match = mpq_class(row.series_coefficient) == row.brute_force;
    if (!row.match) report.all_match = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace torsion_genus
