#include "cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>

#include "arith.hpp"
#include "errors.hpp"

namespace dks {

namespace {

std::mutex g_phi_mutex;
std::map<std::int64_t, std::unique_ptr<const IntPoly>> g_phi;

std::mutex g_field_mutex;
std::map<std::int64_t, std::unique_ptr<const CyclotomicField>> g_fields;

IntPoly compute_phi(std::int64_t n) {
  std::vector<std::int64_t> xn1(n + 1, 0);
  xn1[0] = -1;
  xn1[n] = 1;
  IntPoly p(std::move(xn1));
  for (std::int64_t d : divisors(n))
    if (d < n) p = p.divide_exact(cyclotomic_polynomial(d));
  return p;
}

CyclotomicField compute_field(std::int64_t order) {
  const IntPoly& phi = cyclotomic_polynomial(order);
  CyclotomicField f{order, phi.degree(), phi, {}};
  const int deg = f.degree;
  std::vector<std::int64_t> cur(deg, 0);
  cur[0] = 1;
  f.powers.reserve(order);
  for (std::int64_t e = 0; e < order; ++e) {
    f.powers.push_back(cur);
    // multiply by zeta: shift, then fold the x^deg term back with Phi
    std::int64_t top = cur[deg - 1];
    for (int i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < deg; ++i) cur[i] = add_checked(cur[i], -mul_checked(top, phi[i]));
  }
  return f;
}

// Dense polynomials over Q for the extended Euclidean algorithm.
using RatPoly = std::vector<mpq_class>;

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    mpq_class coef = a[i + b.size() - 1] / b.back();
    q[i] = coef;
    if (sgn(coef) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= coef * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

RatPoly sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
  RatPoly out(std::max(a.size(), q.size() + b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  trim(out);
  return out;
}

// Solves A x = b over Q (A given column-wise); nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                   const std::vector<Rational>& rhs) {
  const std::size_t rows = rhs.size(), n = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = cols[c][r];
    m[r][n] = rhs[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    Rational inv = Rational(1) / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (!m[r][n].is_zero()) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][n];
  return x;
}

} // namespace

const IntPoly& cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw DomainError("cyclotomic_polynomial: n must be positive");
  {
    std::lock_guard lock(g_phi_mutex);
    if (auto it = g_phi.find(n); it != g_phi.end()) return *it->second;
  }
  IntPoly p = n == 1 ? IntPoly({-1, 1}) : compute_phi(n);
  std::lock_guard lock(g_phi_mutex);
  auto [it, inserted] = g_phi.emplace(n, std::make_unique<const IntPoly>(std::move(p)));
  return *it->second;
}

const CyclotomicField& cyclotomic_field(std::int64_t order) {
  if (order < 1) throw DomainError("cyclotomic field order must be positive");
  {
    std::lock_guard lock(g_field_mutex);
    if (auto it = g_fields.find(order); it != g_fields.end()) return *it->second;
  }
  auto f = std::make_unique<const CyclotomicField>(compute_field(order));
  std::lock_guard lock(g_field_mutex);
  auto [it, inserted] = g_fields.emplace(order, std::move(f));
  return *it->second;
}

Cyclotomic Cyclotomic::zero(std::int64_t order) {
  const auto& f = cyclotomic_field(order);
  return Cyclotomic(order, std::vector<Rational>(f.degree));
}

Cyclotomic Cyclotomic::constant(std::int64_t order, const Rational& value) {
  Cyclotomic z = zero(order);
  z.c_[0] = value;
  return z;
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t order, std::int64_t e) {
  const auto& f = cyclotomic_field(order);
  const auto& p = f.powers[mod(e, order)];
  std::vector<Rational> c(f.degree);
  for (int i = 0; i < f.degree; ++i) c[i] = Rational(p[i]);
  return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::from_exponent_weights(std::int64_t order, std::span<const Rational> weights) {
  const auto& f = cyclotomic_field(order);
  if (static_cast<std::int64_t>(weights.size()) != order)
    throw DomainError("from_exponent_weights: need one weight per exponent");
  std::vector<mpq_class> acc(f.degree, 0);
  for (std::int64_t e = 0; e < order; ++e) {
    const auto& w = weights[e].raw();
    if (sgn(w) == 0) continue;
    const auto& p = f.powers[e];
    for (int i = 0; i < f.degree; ++i)
      if (p[i] != 0) acc[i] += w * static_cast<long>(p[i]);
  }
  std::vector<Rational> c;
  c.reserve(f.degree);
  for (auto& a : acc) c.push_back(Rational::from_raw(std::move(a)));
  return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::from_poly(std::int64_t order, std::span<const Rational> poly) {
  if (order < 1) throw DomainError("cyclotomic order must be positive");
  std::vector<Rational> w(order);
  for (std::size_t i = 0; i < poly.size(); ++i) w[i % order] += poly[i];
  return from_exponent_weights(order, w);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::as_rational() const {
  if (!is_rational()) throw NotRationalError("cyclotomic element is not rational: " + str());
  return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    std::int64_t m = lcm(order_, o.order_);
    *this = lift(m) + o.lift(m);
    return *this;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : c_) c *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    std::int64_t m = lcm(order_, o.order_);
    *this = lift(m) * o.lift(m);
    return *this;
  }
  std::vector<mpq_class> w(order_, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      w[(i + j) % order_] += c_[i].raw() * o.c_[j].raw();
    }
  }
  std::vector<Rational> wr;
  wr.reserve(w.size());
  for (auto& x : w) wr.push_back(Rational::from_raw(std::move(x)));
  *this = from_exponent_weights(order_, wr);
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero cyclotomic element");
  const auto& f = cyclotomic_field(order_);
  RatPoly r0, r1;
  for (auto c : f.modulus.coeffs()) r0.emplace_back(static_cast<long>(c));
  for (const auto& c : c_) r1.push_back(c.raw());
  trim(r1);
  RatPoly s0, s1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw InternalError("cyclotomic inverse: gcd with Phi is not constant");
  std::vector<Rational> poly;
  for (auto& s : s0) poly.push_back(Rational::from_raw(s / r0[0]));
  return from_poly(order_, poly);
}

Cyclotomic Cyclotomic::lift(std::int64_t m) const {
  if (m < 1 || m % order_ != 0) throw DomainError("lift: order does not divide target");
  if (m == order_) return *this;
  const std::int64_t step = m / order_;
  std::vector<Rational> w(m);
  for (std::size_t i = 0; i < c_.size(); ++i) w[(static_cast<std::int64_t>(i) * step) % m] = c_[i];
  return from_exponent_weights(m, w);
}

Cyclotomic Cyclotomic::descend(std::int64_t n) const {
  if (n < 1 || order_ % n != 0) throw DomainError("descend: target does not divide order");
  if (n == order_) return *this;
  const int deg_n = cyclotomic_field(n).degree;
  std::vector<std::vector<Rational>> cols;
  for (int i = 0; i < deg_n; ++i) cols.push_back(root_of_unity(n, i).lift(order_).c_);
  auto x = solve_columns(cols, c_);
  if (!x) throw DomainError("descend: element is not in the requested subfield");
  return Cyclotomic(n, std::move(*x));
}

Cyclotomic Cyclotomic::minimal_order() const {
  for (std::int64_t n : divisors(order_)) {
    try {
      return descend(n);
    } catch (const DomainError&) {
    }
  }
  return *this;
}

Cyclotomic Cyclotomic::galois(std::int64_t t) const {
  if (gcd(mod(t, order_), order_) != 1 && order_ != 1)
    throw DomainError("galois: exponent not coprime to the field order");
  std::vector<Rational> w(order_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    w[mod(static_cast<std::int64_t>(i) * mod(t, order_), order_)] += c_[i];
  }
  return from_exponent_weights(order_, w);
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  os << "Q(z" << order_ << ")[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i];
  os << "]";
  return os.str();
}

bool same_value(const Cyclotomic& a, const Cyclotomic& b) {
  std::int64_t m = lcm(a.order(), b.order());
  return a.lift(m) == b.lift(m);
}

} // namespace dks
