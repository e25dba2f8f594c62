#include "torsion_genus/delta.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace torsion_genus {

DeltaProvider parse_provider(const std::string& name) {
  if (name == "oracle") return DeltaProvider::oracle;
  if (name == "rules") return DeltaProvider::rules;
  if (name == "trivial") return DeltaProvider::trivial;
  throw std::invalid_argument("unknown delta provider: " + name);
}

std::string provider_name(DeltaProvider p) {
  switch (p) {
    case DeltaProvider::oracle: return "oracle";
    case DeltaProvider::rules: return "rules";
    case DeltaProvider::trivial: return "trivial";
  }
  return "?";
}

int delta_rules(const Permutation& g, const Permutation& h) {
  if (!g.commutes_with(h)) throw std::invalid_argument("delta requires commuting arguments");
  auto cycles = g.cycles();
  // Position lookup: point -> (cycle index, offset within cycle).
  std::vector<std::pair<int, int>> where(g.size());
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (std::size_t t = 0; t < cycles[c].size(); ++t)
      where[cycles[c][t]] = {static_cast<int>(c), static_cast<int>(t)};

  int p_g = CycleType::of(g).parity();
  int sign = 1;

  // Group cycle indices by length.
  std::map<int, std::vector<int>> by_length;
  for (std::size_t c = 0; c < cycles.size(); ++c)
    by_length[static_cast<int>(cycles[c].size())].push_back(static_cast<int>(c));

  for (const auto& [j, block] : by_length) {
    // Induced permutation on the j-cycle blocks and rotation offsets:
    // h(base_i) = g^{k_i}(base_{pi(i)}).
    std::vector<int> pi(block.size());
    long offset_sum = 0;
    for (std::size_t i = 0; i < block.size(); ++i) {
      int image = h(cycles[block[i]][0]);
      auto [c, t] = where[image];
      auto it = std::find(block.begin(), block.end(), c);
      if (it == block.end())
        throw std::logic_error("centralizer element does not preserve cycle lengths");
      pi[i] = static_cast<int>(it - block.begin());
      offset_sum += t;
    }
    if (j % 2 == 0) {
      // Block transpositions contribute (-1)^{j-1} = -1 each; rotations of
      // even cycles contribute (-1)^{p(g)-1} per step.
      std::vector<int> perm = pi;
      int transpositions = 0;
      for (std::size_t i = 0; i < perm.size(); ++i) {
        while (perm[i] != static_cast<int>(i)) {
          std::swap(perm[i], perm[perm[i]]);
          ++transpositions;
        }
      }
      if (transpositions % 2) sign = -sign;
      if (p_g == 0 && offset_sum % 2) sign = -sign;
    }
    // Odd j: both generator kinds carry sign +1.
  }
  return sign;
}

int delta(const Permutation& g, const Permutation& h, DeltaProvider provider, int oracle_bound) {
  switch (provider) {
    case DeltaProvider::oracle: return delta_oracle(g, h, oracle_bound);
    case DeltaProvider::rules: return delta_rules(g, h);
    case DeltaProvider::trivial:
      if (!g.commutes_with(h)) throw std::invalid_argument("delta requires commuting arguments");
      return 1;
  }
  throw std::logic_error("bad provider");
}

std::vector<CentralizerGenerator> centralizer_generators(const Permutation& g) {
  std::vector<CentralizerGenerator> out;
  auto cycles = g.cycles();
  std::map<int, std::vector<int>> by_length;
  for (std::size_t c = 0; c < cycles.size(); ++c)
    by_length[static_cast<int>(cycles[c].size())].push_back(static_cast<int>(c));

  for (const auto& [j, block] : by_length) {
    if (j > 1) {
      for (int c : block) {
        CentralizerGenerator gen;
        gen.h = Permutation::from_cycles(g.size(), {cycles[c]});
        gen.j = j;
        gen.kind = "rotation";
        out.push_back(std::move(gen));
      }
    }
    for (std::size_t i1 = 0; i1 < block.size(); ++i1) {
      for (std::size_t i2 = i1 + 1; i2 < block.size(); ++i2) {
        // Aligned swap: position t of one cycle trades with position t of
        // the other.
        std::vector<int> images(g.size());
        std::iota(images.begin(), images.end(), 0);
        const auto& a = cycles[block[i1]];
        const auto& b = cycles[block[i2]];
        for (int t = 0; t < j; ++t) {
          images[a[t]] = b[t];
          images[b[t]] = a[t];
        }
        CentralizerGenerator gen;
        gen.h = Permutation(images);
        gen.j = j;
        gen.kind = "tau";
        out.push_back(std::move(gen));
      }
    }
  }
  return out;
}

DeltaCompareReport delta_compare(int n, bool generators_only, int oracle_bound) {
  DeltaCompareReport report;
  report.n = n;
  report.generators_only = generators_only;
  for (const auto& parts : partitions_of(n)) {
    Permutation g = CycleType::from_parts(parts).representative();
    auto record = [&](const Permutation& h, int j, const std::string& kind) {
      DeltaRow row;
      row.g_cycles = g.cycle_str();
      row.h_cycles = h.cycle_str();
      row.j = j;
      row.kind = kind;
      row.oracle = delta_oracle(g, h, oracle_bound);
      row.rules = delta_rules(g, h);
      row.agree = row.oracle == row.rules;
      if (!row.agree) ++report.disagreement_count;
      report.rows.push_back(std::move(row));
    };
    if (generators_only) {
      for (const auto& gen : centralizer_generators(g)) record(gen.h, gen.j, gen.kind);
    } else {
      for_each_centralizer_element(g, [&](const Permutation& h) { record(h, 0, "element"); });
    }
  }
  return report;
}

}  // namespace torsion_genus
