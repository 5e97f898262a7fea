#include "rational.hpp"

#include <ostream>
#include <sstream>

#include "arith.hpp"
#include "errors.hpp"

namespace dks {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_raw(mpq_class v) {
  Rational r;
  r.v_ = std::move(v);
  r.v_.canonicalize();
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero rational");
  v_ /= o.v_;
  return *this;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  BigInt num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = BigInt(s);
    } else {
      num = BigInt(s.substr(0, slash));
      den = BigInt(s.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational: '" + s + "'");
  }
  if (den == 0) throw DomainError("rational with zero denominator");
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rat_normalize(const BigInt& p, const BigInt& q) { return Rational(p, q); }

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] = add_checked(out[i + j], mul_checked(a.c_[i], b.c_[j]));
  return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& monic) const {
  if (monic.is_zero() || monic.c_.back() != 1) throw DomainError("divide_exact: divisor not monic");
  std::vector<std::int64_t> rem = c_;
  int dq = degree() - monic.degree();
  if (dq < 0) {
    if (!is_zero()) throw InternalError("divide_exact: nonzero remainder");
    return {};
  }
  std::vector<std::int64_t> q(dq + 1, 0);
  for (int i = dq; i >= 0; --i) {
    std::int64_t lead = rem[i + monic.degree()];
    q[i] = lead;
    if (lead == 0) continue;
    for (int j = 0; j <= monic.degree(); ++j)
      rem[i + j] = add_checked(rem[i + j], -mul_checked(lead, monic.c_[j]));
  }
  for (auto v : rem)
    if (v != 0) throw InternalError("divide_exact: nonzero remainder");
  return IntPoly(std::move(q));
}

std::string IntPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    std::int64_t c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || i == 0) os << a;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

} // namespace dks
