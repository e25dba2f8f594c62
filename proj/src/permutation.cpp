#include "torsion_genus/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace torsion_genus {

Permutation::Permutation(int n) : images_(n) {
  if (n < 0) throw std::invalid_argument("permutation size must be nonnegative");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation t(n);
  if (a < 0 || b < 0 || a >= n || b >= n || a == b)
    throw std::invalid_argument("bad transposition");
  std::swap(t.images_[a], t.images_[b]);
  return t;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation g(n);
  std::vector<bool> used(n, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= n || used[from]) throw std::invalid_argument("bad cycle list");
      used[from] = true;
      g.images_[from] = to;
    }
  }
  return Permutation(g.images_);  // re-validate
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("size mismatch");
  std::vector<int> out(images_.size());
  for (int i = 0; i < size(); ++i) out[i] = images_[other.images_[i]];
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (int i = 0; i < size(); ++i) out[images_[i]] = i;
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

Permutation Permutation::conjugate_by(const Permutation& k) const {
  return k.compose(*this).compose(k.inverse());
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::commutes_with(const Permutation& other) const {
  return compose(other) == other.compose(*this);
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      seen[j] = true;
      cyc.push_back(j);
      j = images_[j];
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return out;
}

std::vector<std::pair<int, int>> Permutation::transposition_word() const {
  std::vector<std::pair<int, int>> word;
  for (const auto& cyc : cycles())
    for (std::size_t i = 1; i < cyc.size(); ++i) word.emplace_back(cyc[0], cyc[i]);
  return word;
}

int Permutation::parity() const { return static_cast<int>(transposition_word().size()) % 2; }

std::string Permutation::cycle_str() const {
  std::string s;
  for (const auto& cyc : cycles()) {
    if (cyc.size() == 1) continue;
    s += "(";
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(cyc[i] + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

CycleType CycleType::of(const Permutation& g) {
  CycleType ct;
  ct.n = g.size();
  ct.multiplicity.assign(ct.n, 0);
  for (const auto& cyc : g.cycles()) ++ct.multiplicity[cyc.size() - 1];
  return ct;
}

CycleType CycleType::from_parts(const std::vector<int>& parts) {
  CycleType ct;
  ct.n = std::accumulate(parts.begin(), parts.end(), 0);
  ct.multiplicity.assign(ct.n, 0);
  for (int part : parts) {
    if (part < 1 || part > ct.n) throw std::invalid_argument("bad partition part");
    ++ct.multiplicity[part - 1];
  }
  return ct;
}

int CycleType::parity() const {
  int p = 0;
  for (int j = 2; j <= n; j += 2) p += mult(j);
  return p % 2;
}

Permutation CycleType::representative() const {
  std::vector<std::vector<int>> cycles;
  int next = 0;
  for (int j = n; j >= 1; --j) {
    for (int i = 0; i < mult(j); ++i) {
      std::vector<int> cyc(j);
      std::iota(cyc.begin(), cyc.end(), next);
      next += j;
      cycles.push_back(std::move(cyc));
    }
  }
  return Permutation::from_cycles(n, cycles);
}

mpz_class CycleType::centralizer_order() const {
  mpz_class order = 1;
  for (int j = 1; j <= n; ++j) {
    int a = mult(j);
    if (a == 0) continue;
    mpz_class jz = j;
    mpz_class pow;
    mpz_pow_ui(pow.get_mpz_t(), jz.get_mpz_t(), a);
    order *= pow * factorial(a);
  }
  return order;
}

mpz_class CycleType::class_size() const { return factorial(n) / centralizer_order(); }

std::vector<int> CycleType::parts() const {
  std::vector<int> out;
  for (int j = n; j >= 1; --j)
    for (int i = 0; i < mult(j); ++i) out.push_back(j);
  return out;
}

std::string CycleType::str() const {
  std::string s;
  for (int part : parts()) {
    if (!s.empty()) s += ",";
    s += std::to_string(part);
  }
  return "[" + s + "]";
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

int orbit_count(const Permutation& f, const Permutation& g) {
  int n = f.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int i = 0; i < n; ++i) {
    unite(i, f(i));
    unite(i, g(i));
  }
  int count = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++count;
  return count;
}

namespace {

/// Cycles of g grouped by length.
std::vector<std::vector<std::vector<int>>> cycles_by_length(const Permutation& g) {
  std::vector<std::vector<std::vector<int>>> blocks(g.size() + 1);
  for (const auto& cyc : g.cycles()) blocks[cyc.size()].push_back(cyc);
  return blocks;
}

}  // namespace

void for_each_centralizer_element(const Permutation& g,
                                  const std::function<void(const Permutation&)>& visit) {
  int n = g.size();
  auto blocks = cycles_by_length(g);

  // Per length j: choose a permutation of the a_j cycle blocks and a
  // rotation offset for each block. The element maps block i onto block
  // sigma(i) with the chosen offset.
  struct LengthChoice {
    int j;
    std::vector<std::vector<int>> cycles;
    std::vector<int> sigma;    // permutation of blocks
    std::vector<int> offsets;  // rotation per block
  };
  std::vector<LengthChoice> choices;
  for (int j = 1; j <= n; ++j) {
    if (blocks[j].empty()) continue;
    LengthChoice lc;
    lc.j = j;
    lc.cycles = blocks[j];
    lc.sigma.resize(lc.cycles.size());
    std::iota(lc.sigma.begin(), lc.sigma.end(), 0);
    lc.offsets.assign(lc.cycles.size(), 0);
    choices.push_back(std::move(lc));
  }

  std::vector<int> images(n);
  std::function<void(std::size_t)> emit = [&](std::size_t level) {
    if (level == choices.size()) {
      visit(Permutation(images));
      return;
    }
    auto& lc = choices[level];
    std::sort(lc.sigma.begin(), lc.sigma.end());
    do {
      std::function<void(std::size_t)> offsets_rec = [&](std::size_t block) {
        if (block == lc.cycles.size()) {
          for (std::size_t i = 0; i < lc.cycles.size(); ++i) {
            const auto& src = lc.cycles[i];
            const auto& dst = lc.cycles[lc.sigma[i]];
            for (int t = 0; t < lc.j; ++t)
              images[src[t]] = dst[(t + lc.offsets[i]) % lc.j];
          }
          emit(level + 1);
          return;
        }
        for (int off = 0; off < lc.j; ++off) {
          lc.offsets[block] = off;
          offsets_rec(block + 1);
        }
      };
      offsets_rec(0);
    } while (std::next_permutation(lc.sigma.begin(), lc.sigma.end()));
  };
  emit(0);
}

std::vector<Permutation> centralizer_elements(const Permutation& g) {
  std::vector<Permutation> out;
  for_each_centralizer_element(g, [&](const Permutation& h) { out.push_back(h); });
  return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  do {
    visit(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

std::uint64_t lehmer_rank(const Permutation& g) {
  int n = g.size();
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (g(j) < g(i)) ++smaller;
    std::uint64_t fact = 1;
    for (int k = 2; k <= n - 1 - i; ++k) fact *= k;
    rank += smaller * fact;
  }
  return rank;
}

}  // namespace torsion_genus
