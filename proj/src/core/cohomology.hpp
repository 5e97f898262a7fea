#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dedekind_sum.hpp"

namespace dks {

/// A crossed homomorphism phi(g1 g2) = phi(g1) + psi(g1) phi(g2), given by an
/// evaluation closure on its domain (Gamma0(N), or Gamma1(N) for restrictions).
struct Cocycle {
  std::int64_t level;
  DirichletCharacter character;
  std::function<Cyclotomic(const SL2Matrix&)> eval;

  Cyclotomic operator()(const SL2Matrix& g) const { return eval(g); }
};

/// S_{chi1,chi2} as a cocycle on Gamma0(N) with its central character.
Cocycle sum_cocycle(const SumContext& ctx);
/// Restriction to Gamma1(N): trivial action, evaluation rejects non-members.
Cocycle restrict_to_gamma1(const Cocycle& phi);
/// Same cocycle with evaluations cached by matrix. Not safe to share across threads.
Cocycle memoized(const Cocycle& phi);

/// gamma -> (psi(gamma) - 1) * constant
struct Coboundary {
  Cyclotomic constant;
  DirichletCharacter psi;

  Cyclotomic operator()(const SL2Matrix& gamma) const;
};

/// (1/phi(N)) sum_j conj(psi)(beta_j) phi(beta_j gamma beta_{sigma(j)}^-1)
Cyclotomic project(const Cocycle& phi, const DirichletCharacter& psi, const SL2Matrix& gamma,
                   const BetaReps& betas);
Cyclotomic project(const Cocycle& phi, const DirichletCharacter& psi, const SL2Matrix& gamma);

/// (1/phi(N)) sum_j conj(psi)(beta_j) phi(beta_j)
Cyclotomic coboundary_constant(const Cocycle& phi, const DirichletCharacter& psi,
                               const BetaReps& betas);
Cyclotomic coboundary_constant(const Cocycle& phi, const DirichletCharacter& psi);

struct CheckFailure {
  SL2Matrix gamma;
  std::string detail;
};

struct SplitReport {
  std::string psi_label;
  bool central = false;
  Cyclotomic constant;
  std::size_t checked = 0;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// pi_psi(S) - [psi central] S = (1 - psi(gamma)) c on every test element.
SplitReport verify_split(const SumContext& ctx, const DirichletCharacter& psi,
                         std::span<const SL2Matrix> testset);
/// Same, evaluating S through `s` (typically a memoized sum_cocycle(ctx) shared
/// across several psi).
SplitReport verify_split(const SumContext& ctx, const Cocycle& s, const DirichletCharacter& psi,
                         std::span<const SL2Matrix> testset);

struct DecompositionReport {
  std::size_t checked = 0;
  std::size_t characters = 0;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// sum over all psi mod N of pi_psi(phi)(gamma) = phi(gamma), gamma in Gamma1(N).
DecompositionReport verify_decomposition(const Cocycle& phi, std::int64_t level,
                                         std::span<const SL2Matrix> testset);

} // namespace dks
