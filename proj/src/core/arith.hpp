#pragma once

// Small-integer number theory used throughout: everything here works on
// int64 moduli of desk-calculator size.

#include <cstdint>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace dks {

using i64 = std::int64_t;

inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

// floor(a / b) for b > 0
inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

inline i64 lcm(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

struct ExtGcd {
  i64 g, x, y;  // g = x*a + y*b, g >= 0
};

inline ExtGcd ext_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
    std::tie(old_t, t) = std::pair{t, old_t - q * t};
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

inline i64 mod_inverse(i64 a, i64 m) {
  if (m == 1) return 0;
  ExtGcd e = ext_gcd(mod(a, m), m);
  if (e.g != 1) throw DomainError("mod_inverse: argument not invertible");
  return mod(e.x, m);
}

inline i64 mul_checked(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("integer overflow in product");
  return r;
}

inline i64 add_checked(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("integer overflow in sum");
  return r;
}

struct PrimePower {
  i64 p;
  int e;
  i64 pe;
};

inline std::vector<PrimePower> factorize(i64 n) {
  std::vector<PrimePower> out;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    PrimePower f{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++f.e;
      f.pe *= p;
    }
    out.push_back(f);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

inline i64 euler_phi(i64 n) {
  i64 r = n;
  for (const auto& f : factorize(n)) r = r / f.p * (f.p - 1);
  return r;
}

inline int mobius(i64 n) {
  int m = 1;
  for (const auto& f : factorize(n)) {
    if (f.e > 1) return 0;
    m = -m;
  }
  return m;
}

inline std::vector<i64> divisors(i64 n) {
  std::vector<i64> lo, hi;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

inline std::vector<i64> units_mod(i64 n) {
  std::vector<i64> out;
  for (i64 j = 1; j <= n; ++j)
    if (gcd(j, n) == 1) out.push_back(j % n);
  if (n == 1) out = {0};
  return out;
}

} // namespace dks
