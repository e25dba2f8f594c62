#include "torsion_genus/plethysm.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "torsion_genus/permutation.hpp"

namespace torsion_genus {

namespace {

std::int64_t to_small(const mpz_class& v) {
  if (!v.fits_slong_p()) throw std::domain_error("superdimension too large for product exponent");
  return v.get_si();
}

std::vector<ProductFactor> plethysm_factors(const IntSeries& f, int step_j, int t_sign,
                                            bool invert_exponent) {
  if (step_j < 1) throw std::invalid_argument("plethysm step must be positive");
  if (t_sign != 1 && t_sign != -1) throw std::invalid_argument("t_sign must be +-1");
  std::vector<ProductFactor> factors;
  for (const auto& [e, d] : f.terms()) {
    if (e.p != 0) throw std::invalid_argument("plethysm input must be a (q,y)-series");
    ProductFactor fac;
    fac.sign = -t_sign;
    fac.monomial = exp_pqy(step_j, e.q, e.y);
    fac.exponent = invert_exponent ? -to_small(d) : to_small(d);
    factors.push_back(fac);
  }
  return factors;
}

}  // namespace

IntSeries sym_generating(const IntSeries& f, int step_j, Truncation trunc) {
  auto factors = plethysm_factors(f, step_j, /*t_sign=*/1, /*invert_exponent=*/true);
  return expand_product<IntegerDomain>(factors, trunc, f.q_denominator_bound());
}

IntSeries wedge_generating(const IntSeries& f, int step_j, int t_sign, Truncation trunc) {
  auto factors = plethysm_factors(f, step_j, t_sign, /*invert_exponent=*/false);
  return expand_product<IntegerDomain>(factors, trunc, f.q_denominator_bound());
}

IntSeries superdimension_series(const SuperVectorSpace& space, Frac q_max) {
  IntSeries f(Truncation(0, q_max), 2);
  for (const auto& v : space.basis) {
    if (v.q_weight < Frac(0)) throw std::invalid_argument("q-eigenvalues must be nonnegative");
    f.add_term(exp_qy(v.q_weight, v.y_weight), v.parity ? mpz_class(-1) : mpz_class(1));
  }
  return f;
}

IntSeries brute_supertrace_symwedge(const SuperVectorSpace& space, int n, PowerKind kind) {
  int dim = static_cast<int>(space.basis.size());
  if (dim > kBruteDimBound) throw std::invalid_argument("space dimension exceeds brute-force bound");
  if (n < 0 || n > kBruteOrderBound) throw std::invalid_argument("power exceeds brute-force bound");

  // Supertrace of y^A q^B composed with the graded (anti)symmetrizer on
  // V^{tensor n}: only tuples fixed by the index permutation contribute,
  // with the Koszul sign of the reordering (and sgn(sigma) for wedge).
  std::map<ExponentVector, std::int64_t> accum;
  std::vector<int> tuple(n, 0);
  auto visit_sigma = [&](const Permutation& sigma) {
    int sgn_sigma = sigma.parity() ? -1 : 1;
    Permutation sigma_inv = sigma.inverse();
    std::fill(tuple.begin(), tuple.end(), 0);
    while (true) {
      bool fixed = true;
      for (int k = 0; k < n && fixed; ++k) fixed = tuple[sigma_inv(k)] == tuple[k];
      if (fixed) {
        int sign = 1;
        int total_parity = 0;
        Frac qsum(0), ysum(0);
        for (int k = 0; k < n; ++k) {
          const BasisVector& v = space.basis[tuple[k]];
          total_parity += v.parity;
          qsum = qsum + v.q_weight;
          ysum = ysum + v.y_weight;
        }
        // Koszul sign: one -1 per inverted pair of odd factors.
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b)
            if (sigma(a) > sigma(b) && space.basis[tuple[a]].parity &&
                space.basis[tuple[b]].parity)
              sign = -sign;
        if (kind == PowerKind::wedge) sign *= sgn_sigma;
        if (total_parity & 1) sign = -sign;
        accum[exp_qy(qsum, ysum)] += sign;
      }
      // next tuple
      int pos = n - 1;
      while (pos >= 0 && tuple[pos] == dim - 1) tuple[pos--] = 0;
      if (pos < 0) break;
      ++tuple[pos];
    }
  };
  Frac q_max(0);
  for (const auto& v : space.basis) q_max = std::max(q_max, v.q_weight);
  q_max = q_max * Frac(std::max(n, 1));
  if (n == 0) {
    IntSeries r(Truncation(0, q_max), 2);
    r.add_term(ExponentVector{}, 1);
    return r;
  }
  for_each_permutation(n, visit_sigma);

  mpz_class nfact = factorial(n);
  IntSeries result(Truncation(0, q_max), 2);
  for (const auto& [e, v] : accum) {
    mpz_class total(static_cast<long>(v));
    mpz_class quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), total.get_mpz_t(), nfact.get_mpz_t());
    if (sgn(rem) != 0)
      throw std::logic_error("supertrace projector sum not divisible by n! at " + e.str());
    result.add_term(e, quot);
  }
  return result;
}

}  // namespace torsion_genus
