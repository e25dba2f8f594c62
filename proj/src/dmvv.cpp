#include "torsion_genus/dmvv.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "torsion_genus/permutation.hpp"
#include "torsion_genus/plethysm.hpp"

namespace torsion_genus {

namespace {

/// Table entries in row m, as (l, c) pairs.
std::vector<std::pair<Frac, std::int64_t>> table_row(const GenusTable& table, const Frac& m) {
  std::vector<std::pair<Frac, std::int64_t>> out;
  const Frac l_lowest(INT64_MIN + 1);
  for (auto it = table.entries.lower_bound({m, l_lowest});
       it != table.entries.end() && it->first.first == m; ++it)
    out.emplace_back(it->first.second, it->second);
  return out;
}

enum class SliceKind { sym_plus, wedge_plus, wedge_minus };

/// Coefficient of t^a in the Sym/wedge generating series of a sector space,
/// as a (q,y)-series. Cached per (j, a, kind).
class SliceCache {
public:
  SliceCache(const GenusTable& table, Truncation trunc) : table_(table), trunc_(trunc) {}

  const IntSeries& slice(int j, int a, SliceKind kind) {
    auto key = std::make_tuple(j, a, kind);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    SectorSeries sector = sector_series(table_, j, trunc_.q_max);
    const IntSeries& f = kind == SliceKind::wedge_minus ? sector.minus_part : sector.plus_part;
    Truncation gen_window(a, trunc_.q_max);
    // Wedge powers live inside the tensor power with inherited parity, so
    // their supertrace slices come from the alternating (t_sign = -1)
    // generating variant.
    IntSeries gen = kind == SliceKind::sym_plus ? sym_generating(f, 1, gen_window)
                                                : wedge_generating(f, 1, -1, gen_window);
    IntSeries sl = coefficient_of_p(gen, a);
    return cache_.emplace(key, std::move(sl)).first->second;
  }

private:
  const GenusTable& table_;
  Truncation trunc_;
  std::map<std::tuple<int, int, SliceKind>, IntSeries> cache_;
};

}  // namespace

IntSeries direct_orbifold_series(const GenusTable& table, bool twisted, Truncation trunc) {
  SliceCache cache(table, trunc);
  IntSeries result(trunc, 2);
  for (int n = 0; n <= trunc.p_max; ++n) {
    for (const auto& parts : partitions_of(n)) {
      CycleType ct = CycleType::from_parts(parts);
      int class_parity = ct.parity();
      IntSeries contribution = IntSeries::one(Truncation(0, trunc.q_max), 2);
      for (int j = 1; j <= n && !contribution.is_zero(); ++j) {
        int a = ct.mult(j);
        if (a == 0) continue;
        SliceKind kind;
        if (!twisted || j % 2 == 1) {
          kind = SliceKind::sym_plus;
        } else {
          kind = class_parity == 1 ? SliceKind::wedge_plus : SliceKind::wedge_minus;
        }
        contribution = mul(contribution, cache.slice(j, a, kind));
      }
      for (const auto& [e, v] : contribution.terms())
        result.add_term(ExponentVector{n, e.q, e.y}, v);
    }
  }
  return result;
}

namespace {

/// Shared denominator of all four blocks:
/// prod_{n>0, m>=0, l} (1 - p^{2n-1} q^m y^l)^{-c((2n-1)m, l)}.
void odd_power_denominator_factors(const GenusTable& table, const Truncation& trunc,
                                   std::vector<ProductFactor>& out) {
  for (int n = 1; 2 * n - 1 <= trunc.p_max; ++n) {
    for (int m = 0; Frac(m) <= trunc.q_max; ++m) {
      for (const auto& [l, c] : table_row(table, Frac((2 * n - 1) * m)))
        out.push_back({-1, exp_pqy(2 * n - 1, Frac(m), l), -c});
    }
  }
}

/// Even-power factors with half-integer q-exponents:
/// prod_{n>0, m>=1, l} (1 + sign p^{2n} q^{m-1/2} y^l)^{c(n(2m-1), l)}.
void even_power_half_factors(const GenusTable& table, const Truncation& trunc, int sign,
                             std::vector<ProductFactor>& out) {
  for (int n = 1; 2 * n <= trunc.p_max; ++n) {
    for (int m = 1; Frac(2 * m - 1, 2) <= trunc.q_max; ++m) {
      for (const auto& [l, c] : table_row(table, Frac(n * (2 * m - 1))))
        out.push_back({sign, exp_pqy(2 * n, Frac(2 * m - 1, 2), l), c});
    }
  }
}

/// Even-power factors with integer q-exponents:
/// prod_{n>0, m>=0, l} (1 + sign p^{2n} q^m y^l)^{c(2nm, l)}.
void even_power_integer_factors(const GenusTable& table, const Truncation& trunc, int sign,
                                std::vector<ProductFactor>& out) {
  for (int n = 1; 2 * n <= trunc.p_max; ++n) {
    for (int m = 0; Frac(m) <= trunc.q_max; ++m) {
      for (const auto& [l, c] : table_row(table, Frac(2 * n * m)))
        out.push_back({sign, exp_pqy(2 * n, Frac(m), l), c});
    }
  }
}

}  // namespace

FourBlocks four_blocks(const GenusTable& table, Truncation trunc) {
  FourBlocks blocks;
  auto build = [&](int even_sign, bool half_integer) {
    std::vector<ProductFactor> factors;
    odd_power_denominator_factors(table, trunc, factors);
    if (half_integer)
      even_power_half_factors(table, trunc, even_sign, factors);
    else
      even_power_integer_factors(table, trunc, even_sign, factors);
    return expand_product<IntegerDomain>(factors, trunc, 2);
  };
  blocks.zpp = build(+1, true);
  blocks.zpm = build(-1, true);
  blocks.zmp = build(+1, false);
  blocks.zmm = negate(build(-1, false));
  return blocks;
}

IntSeries product_formula_series(const GenusTable& table, bool twisted, Truncation trunc) {
  if (!twisted) {
    std::vector<ProductFactor> factors;
    for (int n = 1; n <= trunc.p_max; ++n) {
      for (int m = 0; Frac(m) <= trunc.q_max; ++m) {
        for (const auto& [l, c] : table_row(table, Frac(n * m)))
          factors.push_back({-1, exp_pqy(n, Frac(m), l), -c});
      }
    }
    return expand_product<IntegerDomain>(factors, trunc, 2);
  }
  FourBlocks blocks = four_blocks(table, trunc);
  IntSeries sum = add(add(blocks.zpp, blocks.zpm), add(blocks.zmp, blocks.zmm));
  return div_exact(sum, 2);
}

DmvvReport verify_dmvv(const GenusTable& table, bool twisted, Truncation trunc) {
  DmvvReport report;
  report.twisted = twisted;
  report.direct = direct_orbifold_series(table, twisted, trunc);
  report.product = product_formula_series(table, twisted, trunc);
  report.mismatches = differing_exponents(report.direct, report.product);
  report.match = report.mismatches.empty();
  return report;
}

}  // namespace torsion_genus
