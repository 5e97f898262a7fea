#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dks {

using BigInt = mpz_class;

/// Exact fraction in lowest terms with positive denominator; zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit on purpose
  Rational(const BigInt& n) : v_(n) {}                   // NOLINT
  Rational(const BigInt& num, const BigInt& den);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigInt floor() const;

  Rational operator-() const { return from_raw(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  /// "p/q", or "p" when q = 1.
  std::string str() const;
  static Rational parse(std::string_view text);

  static Rational from_raw(mpq_class v);

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// p/q in lowest terms; q = 0 is a DomainError.
Rational rat_normalize(const BigInt& p, const BigInt& q);

/// Integer polynomial, lowest degree first, no trailing zeros (zero is empty).
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs);

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Exact quotient by a monic divisor; throws InternalError on a remainder.
  IntPoly divide_exact(const IntPoly& monic) const;
  std::string str() const;

private:
  void trim();
  std::vector<std::int64_t> c_;
};

} // namespace dks
