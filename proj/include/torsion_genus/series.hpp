#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "torsion_genus/fraction.hpp"

namespace torsion_genus {

/// Exponent of a single term p^a q^b y^c. p is an ordinary nonnegative
/// integer power; q and y carry exact fractional exponents (q >= 0,
/// y of either sign with denominator dividing 2).
struct ExponentVector {
  int p = 0;
  Frac q;
  Frac y;

  bool operator==(const ExponentVector&) const = default;
  std::strong_ordering operator<=>(const ExponentVector& o) const {
    if (auto c = p <=> o.p; c != 0) return c;
    if (auto c = q <=> o.q; c != 0) return c;
    return y <=> o.y;
  }

  std::string str() const {
    std::string s;
    if (p != 0) s += "p^" + std::to_string(p) + " ";
    if (!q.is_zero()) s += "q^" + q.str() + " ";
    if (!y.is_zero()) s += "y^" + y.str() + " ";
    if (s.empty()) return "1";
    s.pop_back();
    return s;
  }
};

inline ExponentVector exp_p(int a) { return {a, Frac(0), Frac(0)}; }
inline ExponentVector exp_q(Frac b) { return {0, b, Frac(0)}; }
inline ExponentVector exp_y(Frac c) { return {0, Frac(0), c}; }
inline ExponentVector exp_qy(Frac b, Frac c) { return {0, b, c}; }
inline ExponentVector exp_pqy(int a, Frac b, Frac c) { return {a, b, c}; }

/// Truncation window: terms with p-exponent at most p_max and q-exponent
/// at most q_max are representable. The window is part of the series value.
struct Truncation {
  int p_max = 0;
  Frac q_max;

  Truncation() = default;
  Truncation(int p, Frac q) : p_max(p), q_max(q) {}

  Truncation tighter(const Truncation& o) const {
    return Truncation(std::min(p_max, o.p_max), std::min(q_max, o.q_max));
  }
  bool contains(const ExponentVector& e) const { return e.p <= p_max && e.q <= q_max; }
  bool operator==(const Truncation&) const = default;
};

// ---------------------------------------------------------------------------
// Coefficient domains. Exact domains satisfy the ring axioms on the nose;
// the complex domain is floating point and carries an explicit tolerance
// used for is_zero / equality.

struct IntegerDomain {
  using Value = mpz_class;
  static Value zero() { return Value(0); }
  static Value one() { return Value(1); }
  static Value normalize(Value v) { return v; }
  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  static bool equal(const Value& a, const Value& b) { return a == b; }
  static bool is_unit(const Value& v) { return v == 1 || v == -1; }
  static Value invert_unit(const Value& v) {
    if (!is_unit(v)) throw std::domain_error("integer domain: non-unit constant term");
    return v;
  }
  static std::string str(const Value& v) { return v.get_str(); }
};

struct RationalDomain {
  using Value = mpq_class;
  static Value zero() { return Value(0); }
  static Value one() { return Value(1); }
  // GMP rational arithmetic assumes canonical operands; user-supplied
  // values enter through here.
  static Value normalize(Value v) {
    v.canonicalize();
    return v;
  }
  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  static bool equal(const Value& a, const Value& b) { return a == b; }
  static bool is_unit(const Value& v) { return sgn(v) != 0; }
  static Value invert_unit(const Value& v) {
    if (is_zero(v)) throw std::domain_error("rational domain: zero constant term");
    return Value(1) / v;
  }
  static std::string str(const Value& v) { return v.get_str(); }
};

struct ComplexDomain {
  using Value = std::complex<double>;
  // Tolerance for zero-dropping and equality of floating coefficients.
  static constexpr double tolerance = 1e-12;
  static Value zero() { return {0.0, 0.0}; }
  static Value one() { return {1.0, 0.0}; }
  static Value normalize(Value v) { return v; }
  static bool is_zero(const Value& v) { return std::abs(v) <= tolerance; }
  static bool equal(const Value& a, const Value& b) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tolerance * scale;
  }
  static bool is_unit(const Value& v) { return !is_zero(v); }
  static Value invert_unit(const Value& v) {
    if (is_zero(v)) throw std::domain_error("complex domain: zero constant term");
    return 1.0 / v;
  }
  static std::string str(const Value& v) {
    std::ostringstream os;
    os.precision(15);
    os << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
    return os.str();
  }
};

// ---------------------------------------------------------------------------

/// Sparse truncated series over a coefficient domain. Immutable in spirit:
/// every operation returns a fresh value truncated to the tighter of the
/// operand windows. No term with zero coefficient is ever stored, and all
/// stored exponents lie inside the window.
template <class D>
class Series {
public:
  using Domain = D;
  using Value = typename D::Value;
  using TermMap = std::map<ExponentVector, Value>;

  explicit Series(Truncation trunc, std::int64_t q_denominator_bound = 2)
      : trunc_(trunc), q_den_bound_(q_denominator_bound) {
    if (q_den_bound_ < 1) throw std::invalid_argument("q denominator bound must be positive");
  }

  static Series zero(Truncation trunc, std::int64_t q_den_bound = 2) {
    return Series(trunc, q_den_bound);
  }
  static Series one(Truncation trunc, std::int64_t q_den_bound = 2) {
    Series s(trunc, q_den_bound);
    s.add_term(ExponentVector{}, D::one());
    return s;
  }
  static Series monomial(Truncation trunc, const ExponentVector& e, Value coeff,
                         std::int64_t q_den_bound = 2) {
    Series s(trunc, q_den_bound);
    s.add_term(e, std::move(coeff));
    return s;
  }

  const TermMap& terms() const { return terms_; }
  const Truncation& truncation() const { return trunc_; }
  std::int64_t q_denominator_bound() const { return q_den_bound_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Accumulates coeff at e, validating exponent invariants. Terms outside
  /// the window are silently dropped; zero results are erased.
  void add_term(const ExponentVector& e, Value coeff) {
    validate_exponent(e);
    if (!trunc_.contains(e)) return;
    coeff = D::normalize(std::move(coeff));
    if (D::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (D::is_zero(it->second)) terms_.erase(it);
    }
  }

  Value coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? D::zero() : it->second;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, v] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + D::str(v) + ")*" + e.str();
    }
    return s;
  }

private:
  void validate_exponent(const ExponentVector& e) const {
    if (e.p < 0) throw std::invalid_argument("negative p exponent");
    if (e.q < Frac(0)) throw std::invalid_argument("negative q exponent");
    if (q_den_bound_ % e.q.den() != 0)
      throw std::domain_error("q exponent denominator " + std::to_string(e.q.den()) +
                              " exceeds declared bound " + std::to_string(q_den_bound_));
    if (2 % e.y.den() != 0)
      throw std::domain_error("y exponent denominator must divide 2");
  }

  TermMap terms_;
  Truncation trunc_;
  std::int64_t q_den_bound_;
};

using IntSeries = Series<IntegerDomain>;
using RatSeries = Series<RationalDomain>;
using ComplexSeries = Series<ComplexDomain>;

namespace detail {
inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }
}  // namespace detail

// ---------------------------------------------------------------------------
// Arithmetic.

template <class D>
Series<D> add(const Series<D>& f, const Series<D>& g) {
  Series<D> r(f.truncation().tighter(g.truncation()),
              detail::lcm64(f.q_denominator_bound(), g.q_denominator_bound()));
  for (const auto& [e, v] : f.terms()) r.add_term(e, v);
  for (const auto& [e, v] : g.terms()) r.add_term(e, v);
  return r;
}

template <class D>
Series<D> negate(const Series<D>& f) {
  Series<D> r(f.truncation(), f.q_denominator_bound());
  for (const auto& [e, v] : f.terms()) r.add_term(e, -v);
  return r;
}

template <class D>
Series<D> sub(const Series<D>& f, const Series<D>& g) {
  return add(f, negate(g));
}

template <class D>
Series<D> scale(const Series<D>& f, const typename D::Value& c) {
  Series<D> r(f.truncation(), f.q_denominator_bound());
  typename D::Value factor = D::normalize(c);
  if (D::is_zero(factor)) return r;
  for (const auto& [e, v] : f.terms()) r.add_term(e, v * factor);
  return r;
}

template <class D>
Series<D> mul(const Series<D>& f, const Series<D>& g) {
  Series<D> r(f.truncation().tighter(g.truncation()),
              detail::lcm64(f.q_denominator_bound(), g.q_denominator_bound()));
  const auto& outer = f.term_count() <= g.term_count() ? f : g;
  const auto& inner = f.term_count() <= g.term_count() ? g : f;
  const Truncation& w = r.truncation();
  for (const auto& [e1, v1] : outer.terms()) {
    if (e1.p > w.p_max || e1.q > w.q_max) continue;
    for (const auto& [e2, v2] : inner.terms()) {
      ExponentVector e{e1.p + e2.p, e1.q + e2.q, e1.y + e2.y};
      if (e.p > w.p_max) break;  // inner map is ordered by p first
      if (e.q > w.q_max) continue;
      r.add_term(e, v1 * v2);
    }
  }
  return r;
}

/// Multiplicative inverse of a series whose constant term is a unit and
/// whose remaining terms all increase the p- or q-grade (otherwise the
/// geometric expansion would not terminate under truncation).
template <class D>
Series<D> invert(const Series<D>& f) {
  ExponentVector origin{};
  typename D::Value c0 = f.coefficient(origin);
  typename D::Value c0_inv = D::invert_unit(c0);
  for (const auto& [e, v] : f.terms()) {
    if (e == origin) continue;
    if (e.p == 0 && e.q.is_zero())
      throw std::domain_error("series not invertible under truncation: non-constant term with p=q=0");
  }
  // u = 1 - f/c0, then 1/f = (1/c0) * sum_k u^k.
  Series<D> u = sub(Series<D>::one(f.truncation(), f.q_denominator_bound()), scale(f, c0_inv));
  Series<D> acc = Series<D>::one(f.truncation(), f.q_denominator_bound());
  Series<D> upow = u;
  while (!upow.is_zero()) {
    acc = add(acc, upow);
    upow = mul(upow, u);
  }
  return scale(acc, c0_inv);
}

template <class D>
Series<D> pow_int(const Series<D>& f, std::int64_t n) {
  if (n < 0) return pow_int(invert(f), -n);
  Series<D> result = Series<D>::one(f.truncation(), f.q_denominator_bound());
  Series<D> base = f;
  std::uint64_t e = static_cast<std::uint64_t>(n);
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Truncated infinite products of binomial factors (1 + sign * M)^exponent.

struct ProductFactor {
  int sign = -1;             // +1 or -1
  ExponentVector monomial;   // must have p > 0
  std::int64_t exponent = 1; // any integer
};

namespace detail {

inline mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace detail

/// Expands one factor (1 + sign*M)^e exactly within the window.
template <class D>
Series<D> binomial_factor(const ProductFactor& fac, Truncation trunc, std::int64_t q_den_bound) {
  if (fac.monomial.p <= 0)
    throw std::invalid_argument("product factor must have positive p exponent");
  if (fac.sign != 1 && fac.sign != -1) throw std::invalid_argument("factor sign must be +-1");
  Series<D> r(trunc, q_den_bound);
  std::int64_t e = fac.exponent;
  for (std::int64_t k = 0;; ++k) {
    ExponentVector ek{static_cast<int>(k * fac.monomial.p), fac.monomial.q * Frac(k),
                      fac.monomial.y * Frac(k)};
    if (ek.p > trunc.p_max || ek.q > trunc.q_max) break;
    mpz_class binom;
    int sign_k = (fac.sign == -1 && (k & 1)) ? -1 : 1;
    if (e >= 0) {
      if (k > e) break;
      binom = detail::binomial(static_cast<std::uint64_t>(e), static_cast<std::uint64_t>(k));
    } else {
      // (1+x)^e = sum_k C(-e+k-1, k) (-x)^k for e < 0.
      binom = detail::binomial(static_cast<std::uint64_t>(-e + k - 1), static_cast<std::uint64_t>(k));
      if (k & 1) sign_k = -sign_k;
    }
    if (sign_k < 0) binom = -binom;
    if constexpr (std::is_same_v<D, IntegerDomain>) {
      r.add_term(ek, binom);
    } else if constexpr (std::is_same_v<D, RationalDomain>) {
      r.add_term(ek, mpq_class(binom));
    } else {
      r.add_term(ek, typename D::Value(binom.get_d(), 0.0));
    }
  }
  return r;
}

/// Truncated product over a list of binomial factors. Factors whose monomial
/// already exceeds the window contribute 1 and are skipped.
template <class D>
Series<D> expand_product(std::span<const ProductFactor> factors, Truncation trunc,
                         std::int64_t q_den_bound = 2) {
  Series<D> r = Series<D>::one(trunc, q_den_bound);
  for (const auto& fac : factors) {
    if (fac.monomial.p <= 0)
      throw std::invalid_argument("product factor must have positive p exponent");
    if (fac.exponent == 0) continue;
    if (fac.monomial.p > trunc.p_max || fac.monomial.q > trunc.q_max) continue;
    r = mul(r, binomial_factor<D>(fac, trunc, q_den_bound));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Substitutions and extractions.

enum class QSubstitution { multiply, divide };

/// q -> q^k (multiply) or q -> q^{1/k} (divide). Dividing widens the
/// declared q denominator bound by the factor k and shrinks the window
/// accordingly; multiplying is the exact inverse.
template <class D>
Series<D> substitute_q_power(const Series<D>& f, std::int64_t k, QSubstitution mode) {
  if (k <= 0) throw std::invalid_argument("substitution order must be positive");
  bool divide = mode == QSubstitution::divide;
  std::int64_t bound = divide ? f.q_denominator_bound() * k : f.q_denominator_bound();
  Truncation trunc(f.truncation().p_max,
                   divide ? f.truncation().q_max / Frac(k) : f.truncation().q_max * Frac(k));
  Series<D> r(trunc, bound);
  for (const auto& [e, v] : f.terms()) {
    ExponentVector e2 = e;
    e2.q = divide ? e.q / Frac(k) : e.q * Frac(k);
    r.add_term(e2, v);
  }
  return r;
}

template <class D>
typename D::Value coefficient_at(const Series<D>& f, const ExponentVector& e) {
  return f.coefficient(e);
}

/// Keeps only the q^0 layer.
template <class D>
Series<D> specialize_q0(const Series<D>& f) {
  Series<D> r(f.truncation(), f.q_denominator_bound());
  for (const auto& [e, v] : f.terms())
    if (e.q.is_zero()) r.add_term(e, v);
  return r;
}

/// Sets y := 1, merging coefficients across y-exponents.
template <class D>
Series<D> specialize_y1(const Series<D>& f) {
  Series<D> r(f.truncation(), f.q_denominator_bound());
  for (const auto& [e, v] : f.terms()) r.add_term(ExponentVector{e.p, e.q, Frac(0)}, v);
  return r;
}

/// The (q,y)-series multiplying p^k.
template <class D>
Series<D> coefficient_of_p(const Series<D>& f, int k) {
  Series<D> r(Truncation(0, f.truncation().q_max), f.q_denominator_bound());
  for (const auto& [e, v] : f.terms())
    if (e.p == k) r.add_term(ExponentVector{0, e.q, e.y}, v);
  return r;
}

/// Multiplies by p^k (shifting the window does not apply: terms pushed
/// past p_max are dropped).
template <class D>
Series<D> shift_p(const Series<D>& f, int k, Truncation trunc) {
  Series<D> r(trunc, f.q_denominator_bound());
  for (const auto& [e, v] : f.terms()) r.add_term(ExponentVector{e.p + k, e.q, e.y}, v);
  return r;
}

/// Exact division by a small integer; any non-divisible coefficient is a
/// hard error (integrality is an invariant of every identity in scope).
inline IntSeries div_exact(const IntSeries& f, long n) {
  if (n == 0) throw std::invalid_argument("division by zero");
  IntSeries r(f.truncation(), f.q_denominator_bound());
  for (const auto& [e, v] : f.terms()) {
    mpz_class quot, rem;
    mpz_tdiv_qr_ui(quot.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), std::abs(n));
    if (sgn(rem) != 0)
      throw std::domain_error("non-exact integer division at " + e.str() + ": " + v.get_str());
    if (n < 0) quot = -quot;
    r.add_term(e, quot);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Comparison.

/// Termwise equality; requires identical windows.
template <class D>
bool same_window_equal(const Series<D>& f, const Series<D>& g) {
  if (!(f.truncation() == g.truncation())) return false;
  if (f.term_count() != g.term_count()) return false;
  auto it = f.terms().begin();
  auto jt = g.terms().begin();
  for (; it != f.terms().end(); ++it, ++jt) {
    if (!(it->first == jt->first)) return false;
    if (!D::equal(it->second, jt->second)) return false;
  }
  return true;
}

/// Equality on the intersection of the two windows.
template <class D>
bool equal_on_common_window(const Series<D>& f, const Series<D>& g) {
  Truncation w = f.truncation().tighter(g.truncation());
  for (const auto& [e, v] : f.terms())
    if (w.contains(e) && !D::equal(v, g.coefficient(e))) return false;
  for (const auto& [e, v] : g.terms())
    if (w.contains(e) && !D::equal(v, f.coefficient(e))) return false;
  return true;
}

/// Exponents at which two series differ on the common window.
template <class D>
std::vector<ExponentVector> differing_exponents(const Series<D>& f, const Series<D>& g) {
  Truncation w = f.truncation().tighter(g.truncation());
  std::vector<ExponentVector> out;
  for (const auto& [e, v] : f.terms())
    if (w.contains(e) && !D::equal(v, g.coefficient(e))) out.push_back(e);
  for (const auto& [e, v] : g.terms())
    if (w.contains(e) && D::is_zero(f.coefficient(e)) && !D::is_zero(v)) out.push_back(e);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace torsion_genus
