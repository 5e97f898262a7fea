#pragma once

#include <cstdint>

#include "characters.hpp"
#include "modgroup.hpp"

namespace dks {

/// Sawtooth: 0 on integers, x - floor(x) - 1/2 otherwise.
Rational b1(const Rational& x);

/// s(h, k) = sum_{j mod k} B1(j/k) B1(hj/k); gcd(h, k) = 1 is not required.
Rational classical_sum(std::int64_t h, std::int64_t k);

/// A validated pair of primitive characters and the data derived from it.
class SumContext {
public:
  const DirichletCharacter& chi1() const { return chi1_; }
  const DirichletCharacter& chi2() const { return chi2_; }
  /// psi = chi1 * conj(chi2) mod N
  const DirichletCharacter& psi() const { return psi_; }
  std::int64_t level() const { return level_; }
  /// Values live in Q(zeta_M), M = lcm(order chi1, order chi2).
  std::int64_t field_order() const { return field_order_; }
  int degree() const { return degree_; }

  friend bool operator==(const SumContext& a, const SumContext& b) {
    return a.chi1_ == b.chi1_ && a.chi2_ == b.chi2_;
  }

private:
  friend SumContext make_context(const DirichletCharacter&, const DirichletCharacter&);
  SumContext(DirichletCharacter c1, DirichletCharacter c2, DirichletCharacter psi);

  DirichletCharacter chi1_, chi2_, psi_;
  std::int64_t level_;
  std::int64_t field_order_;
  int degree_;
};

/// Throws ValidationError (modulus <= 1, imprimitive, odd product parity).
SumContext make_context(const DirichletCharacter& chi1, const DirichletCharacter& chi2);

/// The finite double sum at (h, k); N | k, k >= 1, any integer h.
Cyclotomic newform_sum_hk(const SumContext& ctx, std::int64_t h, std::int64_t k);

/// S(gamma) for gamma in Gamma0(N): 0 when c = 0, S(-gamma) = S(gamma),
/// otherwise the (h, k) sum at the left column.
Cyclotomic newform_sum_matrix(const SumContext& ctx, const SL2Matrix& gamma);

/// psi(gamma) = psi(d) for gamma in Gamma0(N).
Cyclotomic psi_of(const SumContext& ctx, const SL2Matrix& gamma);

/// psi at the bottom-right entry of an element of the level-N monoid.
/// `unit` is false (and value 0) when gcd(d, N) > 1.
struct PsiEvaluation {
  Cyclotomic value;
  bool unit;
};
PsiEvaluation psi_of_monoid(const SumContext& ctx, const Mat2& m);

/// rho(n) = sum_{d | n} chi1(n/d) conj(chi2)(d) d
Cyclotomic rho(const SumContext& ctx, std::int64_t n);

/// The context (chi1^t, chi2^t); gcd(t, M) = 1.
SumContext galois_transport(const SumContext& ctx, std::int64_t t);

} // namespace dks
