#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace torsion_genus {

/// Exact fraction over 64-bit integers, always stored reduced with a
/// positive denominator. Used for exponents and other small rationals;
/// coefficient arithmetic lives in the GMP-backed domains instead.
class Frac {
public:
  constexpr Frac() : num_(0), den_(1) {}
  constexpr Frac(std::int64_t n) : num_(n), den_(1) {}
  Frac(std::int64_t n, std::int64_t d) : num_(n), den_(d) { reduce(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_nonnegative() const { return num_ >= 0; }

  Frac operator+(const Frac& o) const {
    return Frac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Frac operator-(const Frac& o) const {
    return Frac(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Frac operator*(const Frac& o) const { return Frac(num_ * o.num_, den_ * o.den_); }
  Frac operator/(const Frac& o) const {
    if (o.num_ == 0) throw std::domain_error("Frac: division by zero");
    return Frac(num_ * o.den_, den_ * o.num_);
  }
  Frac operator-() const {
    Frac r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  bool operator==(const Frac& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const Frac& o) const {
    // Cross-multiplication in 128 bits; exponents are desk-scale.
    __int128 lhs = static_cast<__int128>(num_) * o.den_;
    __int128 rhs = static_cast<__int128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Reduce mod 1 into [0,1).
  Frac mod1() const {
    std::int64_t n = num_ % den_;
    if (n < 0) n += den_;
    Frac r;
    r.num_ = n;
    r.den_ = den_;
    r.reduce();
    return r;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  void reduce() {
    if (den_ == 0) throw std::domain_error("Frac: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

/// Parses "a" or "a/b"; trailing characters are an error.
inline Frac parse_frac(const std::string& text) {
  auto parse_int = [&](const std::string& part) {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(part, &pos);
    if (pos != part.size()) throw std::invalid_argument(part);
    return v;
  };
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Frac(parse_int(text));
    return Frac(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed fraction: '" + text + "'");
  }
}

}  // namespace torsion_genus
