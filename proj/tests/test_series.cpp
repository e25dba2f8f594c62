#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "torsion_genus/series.hpp"

using namespace torsion_genus;

namespace {

Truncation window(int p_max, Frac q_max) { return Truncation(p_max, q_max); }

IntSeries from_terms(Truncation w, std::initializer_list<std::pair<ExponentVector, long>> terms,
                     std::int64_t q_bound = 2) {
  IntSeries s(w, q_bound);
  for (const auto& [e, c] : terms) s.add_term(e, mpz_class(c));
  return s;
}

/// Seeded random series for the property tests.
IntSeries random_series(std::mt19937_64& rng, Truncation w) {
  IntSeries s(w, 2);
  int terms = static_cast<int>(rng() % 6);
  for (int i = 0; i < terms; ++i) {
    ExponentVector e;
    e.p = static_cast<int>(rng() % (w.p_max + 1));
    e.q = Frac(static_cast<std::int64_t>(rng() % 5), 2);
    if (e.q > w.q_max) e.q = w.q_max;
    e.y = Frac(static_cast<std::int64_t>(rng() % 7) - 3, 2);
    s.add_term(e, mpz_class(static_cast<long>(rng() % 9) - 4));
  }
  return s;
}

}  // namespace

TEST_CASE("addition cancels and respects identities") {
  auto w = window(3, Frac(3));
  auto one_plus_q = from_terms(w, {{{}, 1}, {exp_q(Frac(1)), 1}});
  auto one_minus_q = from_terms(w, {{{}, 1}, {exp_q(Frac(1)), -1}});
  auto sum = add(one_plus_q, one_minus_q);
  CHECK(sum.term_count() == 1);
  CHECK(coefficient_at(sum, {}) == 2);

  auto p = from_terms(w, {{exp_p(1), 1}});
  CHECK(same_window_equal(add(p, IntSeries::zero(w)), p));

  auto half = from_terms(w, {{exp_qy(Frac(1, 2), Frac(-1)), 1}});
  auto doubled = add(half, half);
  CHECK(coefficient_at(doubled, exp_qy(Frac(1, 2), Frac(-1))) == 2);
}

TEST_CASE("multiplication convolves and truncates") {
  auto w = window(3, Frac(3));
  auto one_plus_q = from_terms(w, {{{}, 1}, {exp_q(Frac(1)), 1}});
  auto one_minus_q = from_terms(w, {{{}, 1}, {exp_q(Frac(1)), -1}});
  auto prod = mul(one_plus_q, one_minus_q);
  CHECK(coefficient_at(prod, {}) == 1);
  CHECK(coefficient_at(prod, exp_q(Frac(1))) == 0);
  CHECK(coefficient_at(prod, exp_q(Frac(2))) == -1);

  auto tight = window(1, Frac(1));
  auto one_plus_p = from_terms(tight, {{{}, 1}, {exp_p(1), 1}});
  auto sq = mul(one_plus_p, one_plus_p);
  CHECK(coefficient_at(sq, {}) == 1);
  CHECK(coefficient_at(sq, exp_p(1)) == 2);
  CHECK(sq.term_count() == 2);  // p^2 dropped by the window

  // (y^{1/2} - y^{-1/2})^2 = y - 2 + y^{-1}
  auto root = from_terms(w, {{exp_y(Frac(1, 2)), 1}, {exp_y(Frac(-1, 2)), -1}});
  auto square = mul(root, root);
  CHECK(coefficient_at(square, exp_y(Frac(1))) == 1);
  CHECK(coefficient_at(square, {}) == -2);
  CHECK(coefficient_at(square, exp_y(Frac(-1))) == 1);
}

TEST_CASE("pow_int covers inversion and binomial series") {
  auto w = window(0, Frac(3));
  auto one_minus_q = from_terms(w, {{{}, 1}, {exp_q(Frac(1)), -1}});
  auto inv = pow_int(one_minus_q, -1);
  for (int m = 0; m <= 3; ++m) CHECK(coefficient_at(inv, exp_q(Frac(m))) == 1);

  auto anything = from_terms(w, {{{}, 5}, {exp_q(Frac(1)), 3}});
  auto zeroth = pow_int(anything, 0);
  CHECK(zeroth.term_count() == 1);
  CHECK(coefficient_at(zeroth, {}) == 1);

  // (1 - pq)^{-2} at P,Q <= 2, against the independent geometric route:
  // square of (1 - pq)^{-1} accumulated by hand.
  auto w2 = window(2, Frac(2));
  auto f = from_terms(w2, {{{}, 1}, {exp_pqy(1, Frac(1), Frac(0)), -1}});
  IntSeries geometric(w2, 2);
  for (int k = 0; k <= 2; ++k) geometric.add_term(exp_pqy(k, Frac(k), Frac(0)), 1);
  auto by_hand = mul(geometric, geometric);
  auto by_pow = pow_int(f, -2);
  CHECK(same_window_equal(by_pow, by_hand));
  CHECK(coefficient_at(by_pow, exp_pqy(1, Frac(1), Frac(0))) == 2);
  CHECK(coefficient_at(by_pow, exp_pqy(2, Frac(2), Frac(0))) == 3);
}

TEST_CASE("pow_int rejects non-invertible constant terms") {
  auto w = window(2, Frac(2));
  auto two = from_terms(w, {{{}, 2}});
  CHECK_THROWS_AS(pow_int(two, -1), std::domain_error);
  auto no_constant = from_terms(w, {{exp_p(1), 1}});
  CHECK_THROWS_AS(pow_int(no_constant, -1), std::domain_error);
}

TEST_CASE("expand_product matches known expansions") {
  auto w = window(4, Frac(2));
  std::vector<ProductFactor> geo = {{-1, exp_p(1), -1}};
  auto s = expand_product<IntegerDomain>(geo, w);
  for (int k = 0; k <= 4; ++k) CHECK(coefficient_at(s, exp_p(k)) == 1);

  // Partitions into odd parts, counted by direct enumeration.
  auto odd_partition_count = [](int n) {
    std::function<int(int, int)> rec = [&](int remaining, int max_part) {
      if (remaining == 0) return 1;
      int count = 0;
      for (int part = std::min(remaining, max_part); part >= 1; part -= 2)
        count += rec(remaining - part, part);
      return count;
    };
    int top = n % 2 ? n : n - 1;
    return n == 0 ? 1 : rec(n, std::max(top, 1));
  };
  std::vector<ProductFactor> odd_parts = {{-1, exp_p(1), -1}, {-1, exp_p(3), -1}};
  auto odd = expand_product<IntegerDomain>(odd_parts, w);
  const long expected[] = {1, 1, 1, 2, 2};
  for (int k = 0; k <= 4; ++k) {
    CHECK(coefficient_at(odd, exp_p(k)) == expected[k]);
    CHECK(odd_partition_count(k) == expected[k]);
  }

  std::vector<ProductFactor> plus = {{+1, exp_p(2), 1}, {+1, exp_p(4), 1}};
  auto sparse = expand_product<IntegerDomain>(plus, w);
  CHECK(coefficient_at(sparse, {}) == 1);
  CHECK(coefficient_at(sparse, exp_p(2)) == 1);
  CHECK(coefficient_at(sparse, exp_p(4)) == 1);
  CHECK(sparse.term_count() == 3);

  std::vector<ProductFactor> bad = {{-1, exp_q(Frac(1)), 1}};
  CHECK_THROWS_AS(expand_product<IntegerDomain>(bad, w), std::invalid_argument);
}

TEST_CASE("q substitution in both directions") {
  auto w = window(0, Frac(6));
  auto q2 = from_terms(w, {{exp_q(Frac(2)), 1}});
  auto down = substitute_q_power(q2, 2, QSubstitution::divide);
  CHECK(coefficient_at(down, exp_q(Frac(1))) == 1);

  auto one = IntSeries::one(w);
  CHECK(coefficient_at(substitute_q_power(one, 5, QSubstitution::multiply), {}) == 1);
  CHECK(coefficient_at(substitute_q_power(one, 5, QSubstitution::divide), {}) == 1);

  auto f = from_terms(w, {{exp_q(Frac(1)), 1}, {exp_q(Frac(3)), 1}});
  auto up = substitute_q_power(f, 2, QSubstitution::multiply);
  CHECK(coefficient_at(up, exp_q(Frac(2))) == 1);
  CHECK(coefficient_at(up, exp_q(Frac(6))) == 1);

  // Round trip and denominator-bound widening.
  auto round = substitute_q_power(up, 2, QSubstitution::divide);
  CHECK(equal_on_common_window(round, f));
  auto widened = substitute_q_power(f, 3, QSubstitution::divide);
  CHECK(widened.q_denominator_bound() == 6);
  CHECK(coefficient_at(widened, exp_q(Frac(1, 3))) == 1);
}

TEST_CASE("coefficient access and specialization") {
  auto w = window(2, Frac(2));
  auto f = from_terms(w, {{{}, 1}, {exp_pqy(1, Frac(1), Frac(0)), 2}});
  CHECK(coefficient_at(f, exp_pqy(1, Frac(1), Frac(0))) == 2);
  CHECK(coefficient_at(f, exp_pqy(1, Frac(0), Frac(0))) == 0);

  auto g = from_terms(w, {{exp_y(Frac(1)), 1}, {exp_y(Frac(-1)), 1}});
  auto at1 = specialize_y1(g);
  CHECK(at1.term_count() == 1);
  CHECK(coefficient_at(at1, {}) == 2);

  auto h = from_terms(w, {{{}, 1}, {exp_q(Frac(1)), 1}, {exp_qy(Frac(1), Frac(1)), 1}});
  auto at_q0 = specialize_q0(h);
  CHECK(at_q0.term_count() == 1);
  CHECK(coefficient_at(at_q0, {}) == 1);
}

TEST_CASE("exponent invariants are enforced") {
  auto w = window(2, Frac(2));
  IntSeries s(w, 2);
  CHECK_THROWS_AS(s.add_term(exp_q(Frac(-1)), mpz_class(1)), std::invalid_argument);
  CHECK_THROWS_AS(s.add_term(exp_q(Frac(1, 3)), mpz_class(1)), std::domain_error);
  CHECK_THROWS_AS(s.add_term(exp_y(Frac(1, 3)), mpz_class(1)), std::domain_error);
  IntSeries wide(w, 6);
  CHECK_NOTHROW(wide.add_term(exp_q(Frac(1, 3)), mpz_class(1)));
}

TEST_CASE("ring laws on random series") {
  std::mt19937_64 rng(31337);
  auto w = window(3, Frac(2));
  for (int round = 0; round < 200; ++round) {
    auto a = random_series(rng, w);
    auto b = random_series(rng, w);
    auto c = random_series(rng, w);
    CHECK(same_window_equal(add(a, b), add(b, a)));
    CHECK(same_window_equal(mul(a, b), mul(b, a)));
    CHECK(same_window_equal(add(add(a, b), c), add(a, add(b, c))));
    CHECK(same_window_equal(mul(mul(a, b), c), mul(a, mul(b, c))));
    CHECK(same_window_equal(mul(a, add(b, c)), add(mul(a, b), mul(a, c))));
  }
}

TEST_CASE("ring laws hold in the rational domain too") {
  std::mt19937_64 rng(2718);
  auto w = window(2, Frac(2));
  auto random_rational = [&]() {
    RatSeries s(w, 2);
    int terms = static_cast<int>(rng() % 5);
    for (int i = 0; i < terms; ++i) {
      ExponentVector e;
      e.p = static_cast<int>(rng() % 3);
      e.q = Frac(static_cast<std::int64_t>(rng() % 5), 2);
      if (e.q > w.q_max) e.q = w.q_max;
      e.y = Frac(static_cast<std::int64_t>(rng() % 5) - 2, 2);
      s.add_term(e, mpq_class(static_cast<long>(rng() % 9) - 4,
                              static_cast<long>(rng() % 3) + 1));
    }
    return s;
  };
  for (int round = 0; round < 80; ++round) {
    auto a = random_rational();
    auto b = random_rational();
    auto c = random_rational();
    CHECK(same_window_equal(mul(a, b), mul(b, a)));
    CHECK(same_window_equal(mul(mul(a, b), c), mul(a, mul(b, c))));
    CHECK(same_window_equal(mul(a, add(b, c)), add(mul(a, b), mul(a, c))));
  }
}

TEST_CASE("inverse times original is one, up to truncation") {
  std::mt19937_64 rng(4242);
  auto w = window(3, Frac(2));
  for (int round = 0; round < 100; ++round) {
    auto a = random_series(rng, w);
    IntSeries f(w, 2);
    f.add_term({}, mpz_class(round % 2 == 0 ? 1 : -1));
    for (const auto& [e, v] : a.terms()) {
      if (e.p == 0 && e.q.is_zero()) continue;
      f.add_term(e, v);
    }
    auto prod = mul(pow_int(f, -1), f);
    CHECK(same_window_equal(prod, IntSeries::one(w)));
  }
}

TEST_CASE("expand_product equals the fold of pow_int and mul") {
  std::mt19937_64 rng(777);
  auto w = window(4, Frac(2));
  for (int round = 0; round < 60; ++round) {
    std::vector<ProductFactor> factors;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) {
      ProductFactor fac;
      fac.sign = rng() % 2 == 0 ? 1 : -1;
      fac.monomial = exp_pqy(1 + static_cast<int>(rng() % 3),
                             Frac(static_cast<std::int64_t>(rng() % 3), 2),
                             Frac(static_cast<std::int64_t>(rng() % 5) - 2, 2));
      fac.exponent = static_cast<std::int64_t>(rng() % 7) - 3;
      factors.push_back(fac);
    }
    auto direct = expand_product<IntegerDomain>(factors, w);
    auto folded = IntSeries::one(w);
    for (const auto& fac : factors) {
      IntSeries base(w, 2);
      base.add_term({}, 1);
      base.add_term(fac.monomial, mpz_class(fac.sign));
      folded = mul(folded, pow_int(base, fac.exponent));
    }
    CHECK(same_window_equal(direct, folded));
  }
}

TEST_CASE("substitution round trip on random series") {
  std::mt19937_64 rng(99);
  auto w = window(3, Frac(2));
  for (int round = 0; round < 100; ++round) {
    auto a = random_series(rng, w);
    for (std::int64_t k : {2, 3}) {
      auto round_trip =
          substitute_q_power(substitute_q_power(a, k, QSubstitution::multiply), k,
                             QSubstitution::divide);
      CHECK(equal_on_common_window(round_trip, a));
    }
  }
}

TEST_CASE("rational and complex domains honor their contracts") {
  auto w = window(2, Frac(2));
  RatSeries r(w, 2);
  r.add_term({}, mpq_class(1, 2));
  r.add_term({}, mpq_class(1, 2));
  CHECK(coefficient_at(r, {}) == 1);

  RatSeries f(w, 2);
  f.add_term({}, mpq_class(2));
  f.add_term(exp_p(1), mpq_class(3));
  auto inv = pow_int(f, -1);
  CHECK(coefficient_at(inv, {}) == mpq_class(1, 2));
  CHECK(coefficient_at(inv, exp_p(1)) == mpq_class(-3, 4));

  ComplexSeries c(w, 2);
  c.add_term({}, {1.0, 0.0});
  c.add_term({}, {-1.0, 1e-15});  // collapses to zero under the domain tolerance
  CHECK(c.is_zero());
}

TEST_CASE("integer division is exact or loud") {
  auto w = window(2, Frac(2));
  auto f = from_terms(w, {{{}, 4}, {exp_p(1), -6}});
  auto half = div_exact(f, 2);
  CHECK(coefficient_at(half, {}) == 2);
  CHECK(coefficient_at(half, exp_p(1)) == -3);
  auto odd = from_terms(w, {{{}, 3}});
  CHECK_THROWS_AS(div_exact(odd, 2), std::domain_error);
}
