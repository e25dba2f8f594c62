#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "torsion_genus/fraction.hpp"

namespace torsion_genus {

/// Coefficient table of a two-variable genus: integer entries c(m,l) with
/// m a nonnegative integer and l a half-integer, plus the complex dimension
/// of the underlying space. This is the sole geometric input everywhere;
/// nothing in the library derives a table from geometry.
struct GenusTable {
  using Key = std::pair<Frac, Frac>;  // (m, l)

  int dim_x = 0;
  std::map<Key, std::int64_t> entries;

  std::int64_t at(const Frac& m, const Frac& l) const {
    auto it = entries.find({m, l});
    return it == entries.end() ? 0 : it->second;
  }

  /// Validates and inserts; zero entries are ignored.
  void set(const Frac& m, const Frac& l, std::int64_t c);

  bool operator==(const GenusTable&) const = default;
};

/// The one canonical example: a point, c(0,0) = 1, dimension 0.
GenusTable point_table();

/// Parses the text format: lines "m l c" (fields may be "a/b" fractions),
/// "#" comments, optional header "dim d". Duplicate (m,l) keys and negative
/// m are errors.
GenusTable load_table_text(const std::string& text);
GenusTable load_table_file(const std::string& path);

std::string store_table(const GenusTable& table);

/// Sum of the q^0 row: the Euler number the table encodes.
std::int64_t euler_number(const GenusTable& table);

/// Deterministic pseudo-random table: integer support m in [0, m_max],
/// l in [-l_max, l_max], entries uniform in [-c_bound, c_bound] with zeros
/// dropped.
GenusTable random_table(std::uint64_t seed, int m_max, int l_max, int c_bound, int dim);

}  // namespace torsion_genus
