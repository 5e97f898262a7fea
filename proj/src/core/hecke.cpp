#include "hecke.hpp"

#include "arith.hpp"
#include "errors.hpp"

namespace dks {

std::vector<UpperTriangular> delta_reps(std::int64_t level, std::int64_t n) {
  if (n < 1) throw DomainError("delta_reps: n must be positive");
  std::vector<UpperTriangular> out;
  for (std::int64_t a : divisors(n)) {
    if (gcd(a, level) != 1) continue;
    const std::int64_t d = n / a;
    for (std::int64_t b = 0; b < d; ++b) out.push_back({a, b, d});
  }
  return out;
}

HeckeDecomposition hecke_decompose(std::int64_t level, const UpperTriangular& delta,
                                   const SL2Matrix& gamma) {
  if (!in_gamma0(level, gamma)) throw DomainError("hecke_decompose: gamma not in Gamma0(N)");
  const Mat2 prod = delta.mat() * gamma.mat();
  // left column of delta*gamma is (ah + bk, dk); divide out its gcd
  const std::int64_t g = gcd(prod.a, prod.c);
  const std::int64_t h2 = prod.a / g, k2 = prod.c / g;
  const ExtGcd e = ext_gcd(h2, k2);  // e.x h2 + e.y k2 = 1
  const SL2Matrix completed(h2, -e.y, k2, e.x);
  // completed^-1 * delta * gamma = [[g, B], [0, D]]
  const Mat2 upper = completed.inverse().mat() * prod;
  if (upper.c != 0 || upper.a != g || upper.d <= 0)
    throw InternalError("hecke_decompose: reconstruction is not upper triangular");
  const std::int64_t shift = floor_div(upper.b, upper.d);
  const UpperTriangular delta2{g, upper.b - shift * upper.d, upper.d};
  const SL2Matrix gamma2 = completed * SL2Matrix::T(shift);
  if (gamma2.mat() * delta2.mat() != prod || !in_gamma0(level, gamma2) ||
      gcd(delta2.a, level) != 1 || delta2.a * delta2.d != delta.a * delta.d)
    throw InternalError("hecke_decompose: delta*gamma != gamma'*delta'");
  return {gamma2, delta2};
}

Cyclotomic apply_hecke(const SumContext& ctx, std::int64_t n, const SL2Matrix& gamma) {
  Cyclotomic total = Cyclotomic::zero(ctx.field_order());
  for (const auto& delta : delta_reps(ctx.level(), n)) {
    const auto dec = hecke_decompose(ctx.level(), delta, gamma);
    const auto psi_a = psi_of_monoid(ctx, Mat2{1, 0, 0, delta.a});
    total += psi_a.value * newform_sum_matrix(ctx, dec.gamma);
  }
  return total;
}

ClassicalKnoppReport knopp_check_classical(std::int64_t h, std::int64_t k, std::int64_t n) {
  if (k < 1 || n < 1) throw DomainError("knopp_check_classical: k and n must be positive");
  Rational lhs, sigma;
  for (std::int64_t a : divisors(n)) {
    const std::int64_t d = n / a;
    sigma += Rational(a);
    for (std::int64_t b = 0; b < d; ++b)
      lhs += classical_sum(add_checked(mul_checked(a, h), mul_checked(b, k)), mul_checked(d, k));
  }
  Rational rhs = sigma * classical_sum(h, k);
  const bool eq = lhs == rhs;
  return {h, k, n, std::move(lhs), std::move(rhs), eq};
}

NewformKnoppReport knopp_check_newform(const SumContext& ctx, std::int64_t h, std::int64_t k,
                                       std::int64_t n) {
  if (k < 1 || k % ctx.level() != 0) throw DomainError("knopp_check_newform: need N | k, k >= 1");
  if (n < 1) throw DomainError("knopp_check_newform: n must be positive");
  Cyclotomic lhs = Cyclotomic::zero(ctx.field_order());
  for (std::int64_t a : divisors(n)) {
    if (gcd(a, ctx.level()) != 1) continue;
    const std::int64_t d = n / a;
    Cyclotomic inner = Cyclotomic::zero(ctx.field_order());
    for (std::int64_t b = 0; b < d; ++b)
      inner += newform_sum_hk(ctx, add_checked(mul_checked(a, h), mul_checked(b, k)), mul_checked(d, k));
    lhs += ctx.psi().value(a) * inner;
  }
  lhs = lhs.lift(ctx.field_order());
  Cyclotomic rhs = rho(ctx, n) * newform_sum_hk(ctx, h, k);
  const bool eq = lhs == rhs;
  return {h, k, n, std::move(lhs), std::move(rhs), eq};
}

} // namespace dks
