#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torsion_genus/orbifold_euler.hpp"

using namespace torsion_genus;

TEST_CASE("commuting pairs validate and count orbits") {
  auto g = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
  auto h = Permutation::from_cycles(4, {{0, 2}, {1, 3}});
  auto pair = CommutingPair::make(g, h);
  CHECK(pair.orbit_count == 1);
  CHECK(CommutingPair::make(Permutation(4), Permutation(4)).orbit_count == 4);
  CHECK(CommutingPair::make(g, g).orbit_count == 2);

  auto t1 = Permutation::from_cycles(3, {{0, 1}});
  auto t2 = Permutation::from_cycles(3, {{1, 2}});
  CHECK_THROWS_AS(CommutingPair::make(t1, t2), std::invalid_argument);

  // Orbit counts stay within [1, N].
  for (const auto& parts : partitions_of(5)) {
    Permutation rep = CycleType::from_parts(parts).representative();
    for (const auto& c : centralizer_elements(rep)) {
      auto p = CommutingPair::make(rep, c);
      CHECK(p.orbit_count >= 1);
      CHECK(p.orbit_count <= 5);
    }
  }
}
