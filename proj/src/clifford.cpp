#include "torsion_genus/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace torsion_genus {

CliffordElement CliffordElement::scalar(mpz_class c) {
  CliffordElement r;
  r.add_term(0, c);
  return r;
}

CliffordElement CliffordElement::transposition_vector(int a, int b) {
  if (a == b) throw std::invalid_argument("transposition vector needs distinct indices");
  CliffordElement r;
  r.add_term(Mask(1) << a, 1);
  r.add_term(Mask(1) << b, -1);
  return r;
}

bool CliffordElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

void CliffordElement::add_term(Mask m, const mpz_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
  CliffordElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
  CliffordElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

namespace {

/// Sign and result mask of the monomial product e_S * e_T: each generator
/// of T moves left past the higher generators of the accumulated word, and
/// repeated generators square to -1.
std::pair<int, CliffordElement::Mask> monomial_product(CliffordElement::Mask s,
                                                       CliffordElement::Mask t) {
  int sign = 1;
  CliffordElement::Mask acc = s;
  for (CliffordElement::Mask rest = t; rest != 0; rest &= rest - 1) {
    CliffordElement::Mask bit = rest & (~rest + 1);
    CliffordElement::Mask higher = acc & ~(bit | (bit - 1));
    if (std::popcount(higher) & 1) sign = -sign;
    if (acc & bit) {
      sign = -sign;  // e_i^2 = -1
      acc &= ~bit;
    } else {
      acc |= bit;
    }
  }
  return {sign, acc};
}

}  // namespace

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
  CliffordElement r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      auto [sign, m] = monomial_product(m1, m2);
      r.add_term(m, sign > 0 ? c1 * c2 : mpz_class(-c1 * c2));
    }
  }
  return r;
}

std::string CliffordElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.get_str() + ")";
    for (int i = 0; i < 32; ++i)
      if (m & (Mask(1) << i)) s += "*e" + std::to_string(i + 1);
  }
  return s;
}

CliffordElement lift(const Permutation& g, int oracle_bound) {
  if (g.size() > oracle_bound)
    throw std::invalid_argument("permutation size " + std::to_string(g.size()) +
                                " exceeds Clifford oracle bound " + std::to_string(oracle_bound));
  CliffordElement r = CliffordElement::scalar(1);
  for (auto [a, b] : g.transposition_word())
    r = r * CliffordElement::transposition_vector(a, b);
  return r;
}

int delta_oracle(const Permutation& g, const Permutation& h, int oracle_bound) {
  if (!g.commutes_with(h)) throw std::invalid_argument("delta requires commuting arguments");
  CliffordElement gl = lift(g, oracle_bound);
  CliffordElement hl = lift(h, oracle_bound);
  CliffordElement gh = gl * hl;
  CliffordElement hg = hl * gl;
  if (gh == hg) return 1;
  if (gh == -hg) return -1;
  throw std::logic_error("lift commutator is not a sign for " + g.cycle_str() + ", " +
                         h.cycle_str());
}

bool PresentationReport::all_hold() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

PresentationReport verify_presentation(int n) {
  PresentationReport report;
  report.n = n;
  auto t = [&](int i) { return CliffordElement::transposition_vector(i, i + 1); };
  CliffordElement minus_two = CliffordElement::scalar(-2);
  for (int i = 0; i + 1 < n; ++i) {
    report.checks.push_back(
        {"t" + std::to_string(i + 1) + "^2 = z", t(i) * t(i) == minus_two});
  }
  for (int i = 0; i + 2 < n; ++i) {
    report.checks.push_back({"braid t" + std::to_string(i + 1) + " t" + std::to_string(i + 2),
                             t(i) * t(i + 1) * t(i) == t(i + 1) * t(i) * t(i + 1)});
  }
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 2; j + 1 < n; ++j) {
      report.checks.push_back({"t" + std::to_string(i + 1) + " t" + std::to_string(j + 1) +
                                   " = z t" + std::to_string(j + 1) + " t" + std::to_string(i + 1),
                               t(i) * t(j) == -(t(j) * t(i))});
    }
  }
  return report;
}

}  // namespace torsion_genus
