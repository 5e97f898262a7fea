#pragma once

#include <cstdint>
#include <vector>

#include "dedekind_sum.hpp"

namespace dks {

/// [[a, b], [0, d]] with ad = n and 0 <= b < d.
struct UpperTriangular {
  std::int64_t a, b, d;

  Mat2 mat() const { return {a, b, 0, d}; }
  friend bool operator==(const UpperTriangular&, const UpperTriangular&) = default;
};

/// Delta^N_n: ad = n, gcd(a, N) = 1, 0 <= b < d; sorted by a then b.
std::vector<UpperTriangular> delta_reps(std::int64_t level, std::int64_t n);

struct HeckeDecomposition {
  SL2Matrix gamma;       // in Gamma0(N)
  UpperTriangular delta; // in Delta^N_n
};

/// delta * gamma = gamma' * delta'; throws InternalError if the identity fails.
HeckeDecomposition hecke_decompose(std::int64_t level, const UpperTriangular& delta,
                                   const SL2Matrix& gamma);

/// sqrt(n) T_n^psi applied to S at gamma: sum_delta psi(a) S(gamma'_delta).
Cyclotomic apply_hecke(const SumContext& ctx, std::int64_t n, const SL2Matrix& gamma);

struct ClassicalKnoppReport {
  std::int64_t h, k, n;
  Rational lhs, rhs;
  bool equal;
};

/// sum_{ad=n} sum_{b mod d} s(ah + bk, dk) against sigma(n) s(h, k).
ClassicalKnoppReport knopp_check_classical(std::int64_t h, std::int64_t k, std::int64_t n);

struct NewformKnoppReport {
  std::int64_t h, k, n;
  Cyclotomic lhs, rhs;
  bool equal;
};

/// sum_{ad=n, (a,N)=1} psi(a) sum_{b mod d} S(ah + bk, dk) against rho(n) S(h, k).
NewformKnoppReport knopp_check_newform(const SumContext& ctx, std::int64_t h, std::int64_t k,
                                       std::int64_t n);

} // namespace dks
