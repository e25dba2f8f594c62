#pragma once

#include <string>
#include <vector>

#include "torsion_genus/clifford.hpp"
#include "torsion_genus/permutation.hpp"

namespace torsion_genus {

/// Which discrete-torsion phase to use. The Clifford lift commutator is the
/// ground truth; the rules provider evaluates the closed-form signs for the
/// wreath-product generators of the centralizer; trivial forces +1
/// everywhere (no torsion).
enum class DeltaProvider { oracle, rules, trivial };

DeltaProvider parse_provider(const std::string& name);
std::string provider_name(DeltaProvider p);

/// Closed-form phase: decompose h in the centralizer of g into block
/// transpositions of same-length cycles (sign (-1)^{j-1} each) and cycle
/// rotations (sign 1 for odd length, (-1)^{p(g)-1} for even length), and
/// multiply. Requires gh = hg.
int delta_rules(const Permutation& g, const Permutation& h);

int delta(const Permutation& g, const Permutation& h, DeltaProvider provider,
          int oracle_bound = kDefaultOracleBound);

/// A distinguished generator of the centralizer of a class representative.
struct CentralizerGenerator {
  Permutation h;
  int j = 0;            // cycle length acted on
  std::string kind;     // "rotation" or "tau"
};

/// One rotation per cycle of g plus one aligned swap per unordered pair of
/// same-length cycles.
std::vector<CentralizerGenerator> centralizer_generators(const Permutation& g);

struct DeltaRow {
  std::string g_cycles;
  std::string h_cycles;
  int j = 0;             // 0 when not a tagged generator
  std::string kind;      // "rotation", "tau", or "element"
  int oracle = 0;
  int rules = 0;
  bool agree = false;
};

struct DeltaCompareReport {
  int n = 0;
  bool generators_only = true;
  std::vector<DeltaRow> rows;
  int disagreement_count = 0;
};

/// Tabulates oracle vs rules phases for every conjugacy-class representative
/// g of S_n, over the distinguished centralizer generators (default) or the
/// full centralizer.
DeltaCompareReport delta_compare(int n, bool generators_only = true,
                                 int oracle_bound = kDefaultOracleBound);

}  // namespace torsion_genus
