#include "torsion_genus/genus_table.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace torsion_genus {

void GenusTable::set(const Frac& m, const Frac& l, std::int64_t c) {
  if (m < Frac(0)) throw std::invalid_argument("genus table: negative m exponent " + m.str());
  if (!m.is_integer()) throw std::invalid_argument("genus table: m must be an integer, got " + m.str());
  if (2 % l.den() != 0)
    throw std::invalid_argument("genus table: l denominator must divide 2, got " + l.str());
  if (c == 0) return;
  entries[{m, l}] = c;
}

GenusTable point_table() {
  GenusTable t;
  t.dim_x = 0;
  t.set(Frac(0), Frac(0), 1);
  return t;
}

GenusTable load_table_text(const std::string& text) {
  GenusTable t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::string first;
    if (!(row >> first)) continue;  // blank
    if (first == "dim") {
      if (!(row >> t.dim_x) || t.dim_x < 0)
        throw std::invalid_argument("genus table line " + std::to_string(lineno) +
                                    ": malformed dim header");
      continue;
    }
    std::string l_text, c_text, extra;
    if (!(row >> l_text >> c_text) || (row >> extra))
      throw std::invalid_argument("genus table line " + std::to_string(lineno) +
                                  ": expected 'm l c'");
    Frac m = parse_frac(first);
    Frac l = parse_frac(l_text);
    std::int64_t c;
    try {
      std::size_t pos = 0;
      c = std::stoll(c_text, &pos);
      if (pos != c_text.size()) throw std::invalid_argument(c_text);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("genus table line " + std::to_string(lineno) +
                                  ": malformed coefficient '" + c_text + "'");
    }
    if (t.entries.count({m, l}))
      throw std::invalid_argument("genus table line " + std::to_string(lineno) +
                                  ": duplicate key (" + m.str() + "," + l.str() + ")");
    t.set(m, l, c);
  }
  return t;
}

GenusTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open genus table file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_table_text(buf.str());
}

std::string store_table(const GenusTable& table) {
  std::ostringstream out;
  out << "dim " << table.dim_x << "\n";
  for (const auto& [key, c] : table.entries)
    out << key.first.str() << " " << key.second.str() << " " << c << "\n";
  return out.str();
}

std::int64_t euler_number(const GenusTable& table) {
  std::int64_t sum = 0;
  for (const auto& [key, c] : table.entries)
    if (key.first.is_zero()) sum += c;
  return sum;
}

GenusTable random_table(std::uint64_t seed, int m_max, int l_max, int c_bound, int dim) {
  if (m_max < 0 || l_max < 0 || c_bound < 0) throw std::invalid_argument("bounds must be nonnegative");
  GenusTable t;
  t.dim_x = dim;
  std::mt19937_64 rng(seed);
  // Raw engine output with modulo keeps the stream portable across libraries.
  for (int m = 0; m <= m_max; ++m) {
    for (int l = -l_max; l <= l_max; ++l) {
      if (c_bound == 0) continue;
      std::int64_t span = 2 * static_cast<std::int64_t>(c_bound) + 1;
      std::int64_t c = static_cast<std::int64_t>(rng() % span) - c_bound;
      t.set(Frac(m), Frac(l), c);
    }
  }
  return t;
}

}  // namespace torsion_genus
