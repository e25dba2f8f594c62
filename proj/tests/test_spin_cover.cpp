#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <map>
#include <set>

#include "torsion_genus/clifford.hpp"
#include "torsion_genus/delta.hpp"
#include "torsion_genus/permutation.hpp"

using namespace torsion_genus;

namespace {

Permutation perm(std::initializer_list<int> images) { return Permutation(std::vector<int>(images)); }

Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  return Permutation::from_cycles(n, cycles);
}

}  // namespace

TEST_CASE("permutation basics") {
  auto g = perm({1, 0, 3, 2});  // (12)(34) one-based
  CHECK(g.cycle_str() == "(1 2)(3 4)");
  CHECK(g.parity() == 0);
  CHECK(g.inverse() == g);
  CHECK(CycleType::of(g).parity() == 0);
  CHECK(CycleType::of(perm({1, 0, 2})).parity() == 1);

  auto h = from_cycles(4, {{0, 2}, {1, 3}});  // (13)(24)
  CHECK(g.commutes_with(h));
  CHECK(orbit_count(g, h) == 1);
  CHECK(orbit_count(Permutation(4), Permutation(4)) == 4);

  auto four_cycle = from_cycles(4, {{0, 1, 2, 3}});
  CHECK(four_cycle.parity() == 1);
  CHECK(CycleType::of(four_cycle).str() == "[4]");
}

TEST_CASE("cycle type representatives and centralizer orders") {
  auto ct = CycleType::from_parts({2, 1, 1});
  CHECK(ct.representative().cycle_str() == "(1 2)");
  CHECK(ct.centralizer_order() == 4);  // 2 * 2!
  CHECK(ct.class_size() == 6);

  CHECK(CycleType::from_parts({1, 1, 1, 1}).centralizer_order() == 24);
  CHECK(CycleType::from_parts({2, 2}).centralizer_order() == 8);
  CHECK(CycleType::from_parts({3}).centralizer_order() == 3);

  // Enumerated centralizers match the closed form and consist of exactly
  // the commuting elements.
  for (int n = 2; n <= 5; ++n) {
    for (const auto& parts : partitions_of(n)) {
      CycleType c = CycleType::from_parts(parts);
      Permutation g = c.representative();
      auto elements = centralizer_elements(g);
      std::set<Permutation> unique(elements.begin(), elements.end());
      CHECK(mpz_class(static_cast<long>(unique.size())) == c.centralizer_order());
      for (const auto& h : elements) CHECK(g.commutes_with(h));

      // Brute-force comparison over all of S_n.
      std::size_t brute = 0;
      for_each_permutation(n, [&](const Permutation& h) {
        if (g.commutes_with(h)) ++brute;
      });
      CHECK(brute == unique.size());
    }
  }
}

TEST_CASE("partitions enumerate correctly") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("clifford products anticommute and square to -1") {
  auto e1 = CliffordElement::transposition_vector(0, 1);  // e1 - e2
  auto e12 = CliffordElement::scalar(1);
  {
    CliffordElement a, b;
    a.add_term(1u << 0, 1);  // e1
    b.add_term(1u << 1, 1);  // e2
    auto ab = a * b;
    auto ba = b * a;
    CHECK(ab == -ba);
    CHECK(!(ab == ba));
    auto sq = a * a;
    CHECK(sq == CliffordElement::scalar(-1));
  }
  CHECK(e1 * e1 == CliffordElement::scalar(-2));

  // Disjoint-support vectors anticommute.
  auto v = CliffordElement::transposition_vector(0, 1);
  auto w = CliffordElement::transposition_vector(2, 3);
  CHECK(v * w == -(w * v));
  (void)e12;
}

TEST_CASE("lifts behave like a double cover") {
  CHECK(lift(Permutation(4)) == CliffordElement::scalar(1));
  auto t = lift(Permutation::transposition(4, 0, 1));
  CHECK(t == CliffordElement::transposition_vector(0, 1));

  // lift(g) * lift(g^{-1}) is a scalar +-2^L, and lifts are
  // parity-homogeneous: every monomial length has the parity of the word.
  for (int n = 3; n <= 6; ++n) {
    for (const auto& parts : partitions_of(n)) {
      Permutation g = CycleType::from_parts(parts).representative();
      auto prod = lift(g) * lift(g.inverse());
      CHECK(prod.is_scalar());
      mpz_class c = prod.terms().empty() ? mpz_class(0) : prod.terms().begin()->second;
      mpz_class mag = abs(c);
      std::size_t word = g.transposition_word().size();
      mpz_class expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(word));
      CHECK(mag == expected);

      CliffordElement gl = lift(g);
      for (const auto& [mask, coeff] : gl.terms())
        CHECK(std::popcount(mask) % 2 == static_cast<int>(word % 2));
    }
  }
}

TEST_CASE("delta oracle on the documented pairs") {
  CHECK(delta_oracle(perm({1, 0, 3, 2}), Permutation(4)) == 1);
  CHECK(delta_oracle(from_cycles(4, {{0, 1}}), from_cycles(4, {{2, 3}})) == -1);
  CHECK(delta_oracle(from_cycles(4, {{0, 1}, {2, 3}}), from_cycles(4, {{0, 2}, {1, 3}})) == -1);
  CHECK_THROWS_AS(delta_oracle(from_cycles(3, {{0, 1}}), from_cycles(3, {{1, 2}})),
                  std::invalid_argument);
}

TEST_CASE("presentation relations hold exactly") {
  for (int n : {3, 8}) {
    auto report = verify_presentation(n);
    CHECK(report.all_hold());
    CHECK(!report.checks.empty());
  }
  // Relation counts for n = 8: 7 squares, 6 braids, C(7,2)-6 = 15 distant pairs.
  auto r8 = verify_presentation(8);
  CHECK(r8.checks.size() == 7 + 6 + 15);
}

TEST_CASE("delta rules on the documented generators") {
  CHECK(delta_rules(from_cycles(4, {{0, 1}, {2, 3}}), from_cycles(4, {{0, 2}, {1, 3}})) == -1);
  auto c4 = from_cycles(4, {{0, 1, 2, 3}});
  CHECK(delta_rules(c4, c4) == 1);
  auto c3 = from_cycles(3, {{0, 1, 2}});
  CHECK(delta_rules(c3, c3) == 1);
  // The odd-tau case where the closed form and the lift commutator part ways.
  CHECK(delta_rules(from_cycles(4, {{0, 1}}), from_cycles(4, {{2, 3}})) == 1);
}

TEST_CASE("delta oracle properties, exhaustive for small N") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& parts : partitions_of(n)) {
      Permutation g = CycleType::from_parts(parts).representative();
      std::map<Permutation, int> table;
      for (const auto& h : centralizer_elements(g)) table[h] = delta_oracle(g, h);

      for (const auto& [h, value] : table) {
        CHECK((value == 1 || value == -1));
        if (n <= 3) CHECK(value == 1);
      }
      CHECK(table.at(g) == 1);

      // Character property on the centralizer.
      for (const auto& [h1, v1] : table) {
        for (const auto& [h2, v2] : table) {
          CHECK(table.at(h1.compose(h2)) == v1 * v2);
        }
      }

      // Symmetries used by the modularity argument.
      for (const auto& [h, v] : table) {
        CHECK(v == delta_oracle(g.compose(h.inverse()), h));
        CHECK(v == delta_oracle(h, g.inverse()));
        CHECK(v * delta_oracle(h, g) == 1);
      }
    }
  }
}

TEST_CASE("delta oracle is constant on simultaneous conjugation orbits") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& parts : partitions_of(n)) {
      Permutation g = CycleType::from_parts(parts).representative();
      for (const auto& h : centralizer_elements(g)) {
        int base = delta_oracle(g, h);
        for_each_permutation(n, [&](const Permutation& k) {
          CHECK(delta_oracle(g.conjugate_by(k), h.conjugate_by(k)) == base);
        });
      }
    }
  }
}

TEST_CASE("rules match the oracle on the even-generated subgroup") {
  // Subgroup of the centralizer generated by even-length rotations and
  // swaps of even-length cycles: the two providers agree there.
  for (int n = 2; n <= 8; ++n) {
    for (const auto& parts : partitions_of(n)) {
      Permutation g = CycleType::from_parts(parts).representative();
      std::set<Permutation> subgroup = {Permutation(n)};
      std::vector<Permutation> gens;
      for (const auto& gen : centralizer_generators(g))
        if (gen.j % 2 == 0) gens.push_back(gen.h);
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<Permutation> fresh;
        for (const auto& a : subgroup)
          for (const auto& s : gens) {
            Permutation b = a.compose(s);
            if (!subgroup.count(b)) fresh.push_back(b);
          }
        for (auto& b : fresh) grew |= subgroup.insert(b).second;
      }
      for (const auto& h : subgroup) CHECK(delta_rules(g, h) == delta_oracle(g, h));
    }
  }
}

TEST_CASE("delta_compare tabulates agreements and the documented discrepancy") {
  auto r3 = delta_compare(3, /*generators_only=*/false);
  CHECK(r3.disagreement_count == 0);
  for (const auto& row : r3.rows) {
    CHECK(row.oracle == 1);
    CHECK(row.rules == 1);
  }

  auto r4 = delta_compare(4);
  bool tau2_seen = false, witness_seen = false;
  for (const auto& row : r4.rows) {
    if (row.g_cycles == "(1 2)(3 4)" && row.h_cycles == "(1 3)(2 4)") {
      tau2_seen = true;
      CHECK(row.oracle == -1);
      CHECK(row.rules == -1);
      CHECK(row.agree);
    }
    if (row.g_cycles == "(1 2)" && row.h_cycles == "(3 4)") {
      witness_seen = true;
      CHECK(row.oracle == -1);
      CHECK(row.rules == 1);
      CHECK(!row.agree);
    }
  }
  CHECK(tau2_seen);
  CHECK(witness_seen);
  CHECK(r4.disagreement_count > 0);
}

TEST_CASE("oracle bound is enforced") {
  CHECK_THROWS_AS(lift(Permutation(11)), std::invalid_argument);
  CHECK_NOTHROW(lift(Permutation(11), 12));
}
