// Brute-force reference implementations used to cross-check the library.
// Nothing here goes through the fast evaluators: sums are taken term by term
// with exact rationals, and characters come from tables built by brute force.
#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "core/cyclotomic.hpp"
#include "core/rational.hpp"

namespace oracle {

using dks::Cyclotomic;
using dks::Rational;

inline std::int64_t md(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline Rational sawtooth(const Rational& x) {
  const mpq_class& v = x.raw();
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  if (v.get_den() == 1) return Rational(0);
  return Rational::from_raw(v - mpq_class(fl) - mpq_class(1, 2));
}

inline Rational dedekind(std::int64_t h, std::int64_t k) {
  Rational s;
  for (std::int64_t j = 0; j < k; ++j)
    s += sawtooth(Rational(j, k)) * sawtooth(Rational(h * j, k));
  return s;
}

// A character given by its value table: chi(n) = zeta_order^exp[n mod q], or 0
// where exp is -1.
struct Char {
  std::int64_t q;
  std::int64_t order;
  std::vector<std::int64_t> exp;
};

inline std::int64_t smallest_primitive_root(std::int64_t p) {
  for (std::int64_t g = 2; g < p; ++g) {
    std::int64_t x = 1, ord = 0;
    do {
      x = x * g % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) return g;
  }
  return 1;
}

// Mod an odd prime p: chi(g^t) = zeta_{p-1}^(a t), g the smallest primitive root.
// Mod 4: a = 1 gives the nontrivial character.
inline Char make_char(std::int64_t q, std::int64_t a) {
  Char c{q, 1, std::vector<std::int64_t>(q, -1)};
  if (q == 4) {
    c.order = 2;
    c.exp[1] = 0;
    c.exp[3] = md(a, 2);
    return c;
  }
  c.order = q - 1;
  const std::int64_t g = smallest_primitive_root(q);
  std::int64_t x = 1;
  for (std::int64_t t = 0; t < q - 1; ++t) {
    c.exp[x] = md(a * t, q - 1);
    x = x * g % q;
  }
  return c;
}

inline Cyclotomic value(const Char& c, std::int64_t n) {
  const std::int64_t e = c.exp[md(n, c.q)];
  if (e < 0) return Cyclotomic::zero(c.order);
  return Cyclotomic::root_of_unity(c.order, e);
}

inline Cyclotomic conj_value(const Char& c, std::int64_t n) {
  const std::int64_t e = c.exp[md(n, c.q)];
  if (e < 0) return Cyclotomic::zero(c.order);
  return Cyclotomic::root_of_unity(c.order, md(-e, c.order));
}

// sum_{j mod k} sum_{n mod q1} conj chi2(j) conj chi1(n) B1(j/k) B1(n/q1 + hj/k)
inline Cyclotomic newform_sum(const Char& chi1, const Char& chi2, std::int64_t h, std::int64_t k) {
  Cyclotomic total;
  for (std::int64_t j = 0; j < k; ++j) {
    const Rational bj = sawtooth(Rational(j, k));
    if (bj.is_zero()) continue;
    for (std::int64_t n = 0; n < chi1.q; ++n) {
      const Rational arg = Rational(n, chi1.q) + Rational(h * j, k);
      total += conj_value(chi2, j) * conj_value(chi1, n) * (bj * sawtooth(arg));
    }
  }
  return total;
}

} // namespace oracle
