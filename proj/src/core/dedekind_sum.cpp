#include "dedekind_sum.hpp"

#include <vector>

#include "arith.hpp"
#include "errors.hpp"
#include "int128.hpp"

namespace dks {

Rational b1(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x - Rational(x.floor()) - Rational(1, 2);
}

Rational classical_sum(std::int64_t h, std::int64_t k) {
  if (k < 1) throw DomainError("classical_sum: k must be positive");
  const std::int64_t hr = mod(h, k);
  __int128 acc = 0;
  for (std::int64_t j = 1; j < k; ++j) {
    const std::int64_t r = static_cast<std::int64_t>(static_cast<__int128>(hr) * j % k);
    if (r == 0) continue;
    acc += static_cast<__int128>(2 * j - k) * (2 * r - k);
  }
  return Rational(to_bigint(acc), BigInt(4) * k * k);
}

SumContext::SumContext(DirichletCharacter c1, DirichletCharacter c2, DirichletCharacter psi)
  : chi1_(std::move(c1)), chi2_(std::move(c2)), psi_(std::move(psi)),
    level_(chi1_.modulus() * chi2_.modulus()),
    field_order_(lcm(chi1_.order(), chi2_.order())),
    degree_(cyclotomic_field(field_order_).degree) {}

SumContext make_context(const DirichletCharacter& chi1, const DirichletCharacter& chi2) {
  using Kind = ValidationError::Kind;
  if (chi1.modulus() <= 1 || chi2.modulus() <= 1)
    throw ValidationError(Kind::Modulus, "both character moduli must exceed 1");
  if (!chi1.is_primitive())
    throw ValidationError(Kind::Imprimitive, "chi1 " + chi1.label() + " is not primitive");
  if (!chi2.is_primitive())
    throw ValidationError(Kind::Imprimitive, "chi2 " + chi2.label() + " is not primitive");
  if (chi1.parity() * chi2.parity() != 1)
    throw ValidationError(Kind::Parity, "chi1(-1) chi2(-1) must equal +1");
  const std::int64_t level = chi1.modulus() * chi2.modulus();
  return SumContext(chi1, chi2, char_mul(chi1, chi2.conj(), level));
}

namespace {

// Exponent of conj(chi)(n) on zeta_M for each residue n, -1 off the units.
std::vector<std::int64_t> conj_exponents(const DirichletCharacter& chi, std::int64_t m) {
  std::vector<std::int64_t> out(chi.modulus());
  const std::int64_t scale = m / chi.order();
  for (std::int64_t n = 0; n < chi.modulus(); ++n) {
    const std::int64_t e = chi.value_exponent(n);
    out[n] = e < 0 ? -1 : mod(-e * scale, m);
  }
  return out;
}

} // namespace

Cyclotomic newform_sum_hk(const SumContext& ctx, std::int64_t h, std::int64_t k) {
  const std::int64_t level = ctx.level();
  if (k < 1 || k % level != 0) throw DomainError("newform_sum_hk: need k >= 1 and N | k");
  const std::int64_t m = ctx.field_order();
  const std::int64_t q1 = ctx.chi1().modulus(), q2 = ctx.chi2().modulus();
  const auto e1 = conj_exponents(ctx.chi1(), m);
  const auto e2 = conj_exponents(ctx.chi2(), m);
  const std::int64_t hr = mod(h, k);
  const std::int64_t span = mul_checked(q1, k);
  mul_checked(span, 2);

  // B1(j/k) B1(n/q1 + hj/k) = (2j - k)(2r - q1 k) / (4 q1 k^2), r = (nk + hj q1) mod q1 k
  std::vector<__int128> acc(m, 0);
  std::int64_t hj = 0;  // h j mod k
  std::int64_t jq = 0;  // j mod q2
  for (std::int64_t j = 1; j < k; ++j) {
    hj += hr;
    if (hj >= k) hj -= k;
    if (++jq == q2) jq = 0;
    const std::int64_t ej = e2[jq];
    if (ej < 0) continue;
    const __int128 wj = 2 * static_cast<__int128>(j) - k;
    const std::int64_t shift = hj * q1;
    std::int64_t r = shift;  // n k + shift, reduced mod q1 k
    for (std::int64_t n = 0; n < q1; ++n, r += k) {
      if (r >= span) r -= span;
      const std::int64_t en = e1[n];
      if (en < 0 || r == 0) continue;
      const std::int64_t slot = ej + en;
      acc[slot < m ? slot : slot - m] += wj * (2 * r - span);
    }
  }
  const BigInt den = BigInt(4) * q1 * to_bigint(static_cast<__int128>(k) * k);
  std::vector<Rational> w;
  w.reserve(m);
  for (auto a : acc) w.emplace_back(to_bigint(a), den);
  return Cyclotomic::from_exponent_weights(m, w);
}

Cyclotomic newform_sum_matrix(const SumContext& ctx, const SL2Matrix& gamma) {
  if (!in_gamma0(ctx.level(), gamma)) throw DomainError("newform_sum_matrix: gamma not in Gamma0(N)");
  if (gamma.c() == 0) return Cyclotomic::zero(ctx.field_order());
  if (gamma.c() < 0) return newform_sum_hk(ctx, -gamma.a(), -gamma.c());
  return newform_sum_hk(ctx, gamma.a(), gamma.c());
}

Cyclotomic psi_of(const SumContext& ctx, const SL2Matrix& gamma) {
  if (!in_gamma0(ctx.level(), gamma)) throw DomainError("psi_of: gamma not in Gamma0(N)");
  return ctx.psi().value(gamma.d()).lift(ctx.field_order());
}

PsiEvaluation psi_of_monoid(const SumContext& ctx, const Mat2& m) {
  if (mod(m.c, ctx.level()) != 0) throw DomainError("psi_of_monoid: N must divide c");
  if (ctx.psi().value_exponent(m.d) < 0) return {Cyclotomic::zero(ctx.field_order()), false};
  return {ctx.psi().value(m.d).lift(ctx.field_order()), true};
}

Cyclotomic rho(const SumContext& ctx, std::int64_t n) {
  if (n < 1) throw DomainError("rho: n must be positive");
  const std::int64_t m = ctx.field_order();
  const auto& c1 = ctx.chi1();
  const auto c2 = conj_exponents(ctx.chi2(), m);
  std::vector<Rational> w(m);
  for (std::int64_t d : divisors(n)) {
    const std::int64_t a = c1.value_exponent(n / d);
    const std::int64_t b = c2[d % ctx.chi2().modulus()];
    if (a < 0 || b < 0) continue;
    w[(a * (m / c1.order()) + b) % m] += Rational(d);
  }
  return Cyclotomic::from_exponent_weights(m, w);
}

SumContext galois_transport(const SumContext& ctx, std::int64_t t) {
  if (gcd(mod(t, ctx.field_order()), ctx.field_order()) != 1)
    throw DomainError("galois_transport: t must be coprime to M");
  return make_context(char_galois(ctx.chi1(), t), char_galois(ctx.chi2(), t));
}

} // namespace dks
