#include "cohomology.hpp"

#include <map>
#include <memory>

#include "arith.hpp"
#include "errors.hpp"

namespace dks {

Cocycle sum_cocycle(const SumContext& ctx) {
  return {ctx.level(), ctx.psi(), [ctx](const SL2Matrix& g) { return newform_sum_matrix(ctx, g); }};
}

Cocycle restrict_to_gamma1(const Cocycle& phi) {
  const std::int64_t level = phi.level;
  auto inner = phi.eval;
  return {level, enumerate_characters(level, false).front(), [level, inner](const SL2Matrix& g) {
            if (!in_gamma1(level, g)) throw DomainError("restricted cocycle evaluated off Gamma1(N)");
            return inner(g);
          }};
}

Cocycle memoized(const Cocycle& phi) {
  auto cache = std::make_shared<std::map<SL2Matrix, Cyclotomic>>();
  auto inner = phi.eval;
  return {phi.level, phi.character, [cache, inner](const SL2Matrix& g) {
            if (auto it = cache->find(g); it != cache->end()) return it->second;
            Cyclotomic v = inner(g);
            cache->emplace(g, v);
            return v;
          }};
}

Cyclotomic Coboundary::operator()(const SL2Matrix& gamma) const {
  return (psi.value(gamma.d()) - Cyclotomic::one(1)) * constant;
}

namespace {

void require_level(const Cocycle& phi, const DirichletCharacter& psi) {
  if (psi.modulus() != phi.level) throw DomainError("character modulus differs from the level");
}

} // namespace

Cyclotomic project(const Cocycle& phi, const DirichletCharacter& psi, const SL2Matrix& gamma,
                   const BetaReps& betas) {
  require_level(phi, psi);
  const std::int64_t level = phi.level;
  if (!in_gamma0(level, gamma)) throw DomainError("project: gamma not in Gamma0(N)");
  Cyclotomic total = Cyclotomic::zero(psi.order());
  for (const auto& [j, sj] : coset_permutation(level, gamma)) {
    const SL2Matrix arg = betas[j] * gamma * betas[sj].inverse();
    if (!in_gamma1(level, arg)) throw InternalError("project: conjugated argument not in Gamma1(N)");
    total += psi.value(j).conj() * phi(arg);
  }
  return total * Rational(BigInt(1), BigInt(euler_phi(level)));
}

Cyclotomic project(const Cocycle& phi, const DirichletCharacter& psi, const SL2Matrix& gamma) {
  return project(phi, psi, gamma, BetaReps(phi.level));
}

Cyclotomic coboundary_constant(const Cocycle& phi, const DirichletCharacter& psi,
                               const BetaReps& betas) {
  require_level(phi, psi);
  Cyclotomic total = Cyclotomic::zero(psi.order());
  for (std::int64_t j : betas.units()) total += psi.value(j).conj() * phi(betas[j]);
  return total * Rational(BigInt(1), BigInt(euler_phi(phi.level)));
}

Cyclotomic coboundary_constant(const Cocycle& phi, const DirichletCharacter& psi) {
  return coboundary_constant(phi, psi, BetaReps(phi.level));
}

SplitReport verify_split(const SumContext& ctx, const DirichletCharacter& psi,
                         std::span<const SL2Matrix> testset) {
  return verify_split(ctx, memoized(sum_cocycle(ctx)), psi, testset);
}

SplitReport verify_split(const SumContext& ctx, const Cocycle& s, const DirichletCharacter& psi,
                         std::span<const SL2Matrix> testset) {
  const BetaReps betas(ctx.level());
  SplitReport report;
  report.psi_label = psi.label();
  report.central = psi == ctx.psi();
  report.constant = coboundary_constant(s, psi, betas);
  const Coboundary principal{report.constant, psi};
  for (const auto& g : testset) {
    Cyclotomic lhs = project(s, psi, g, betas);
    if (report.central) lhs -= s(g);
    // pi_psi(S)(g) = [psi = chi] S(g) - (psi(g) - 1) c
    const Cyclotomic diff = lhs + principal(g);
    ++report.checked;
    if (!diff.is_zero())
      report.failures.push_back({g, "projection differs from the coboundary by " + diff.str()});
  }
  return report;
}

DecompositionReport verify_decomposition(const Cocycle& phi, std::int64_t level,
                                         std::span<const SL2Matrix> testset) {
  const Cocycle f = memoized(phi);
  const BetaReps betas(level);
  const auto chars = enumerate_characters(level, false);
  DecompositionReport report;
  report.characters = chars.size();
  for (const auto& g : testset) {
    if (!in_gamma1(level, g)) throw DomainError("verify_decomposition: test element not in Gamma1(N)");
    Cyclotomic total;
    for (const auto& psi : chars) total += project(f, psi, g, betas);
    const Cyclotomic diff = total - f(g);
    ++report.checked;
    if (!diff.is_zero()) report.failures.push_back({g, "sum of projections off by " + diff.str()});
  }
  return report;
}

} // namespace dks
