#include <doctest.h>

#include "core/arith.hpp"
#include "core/cohomology.hpp"
#include "core/errors.hpp"
#include "core/sampling.hpp"

using namespace dks;

namespace {

SumContext ctx(const char* a, const char* b) {
  return make_context(DirichletCharacter::parse(a), DirichletCharacter::parse(b));
}

Cocycle constant_cocycle(std::int64_t level, const Cyclotomic& v) {
  return {level, enumerate_characters(level, false).front(), [v](const SL2Matrix&) { return v; }};
}

} // namespace

TEST_CASE("projection basics") {
  const auto c = ctx("3:[1]", "3:[1]");
  const Cocycle s = sum_cocycle(c);
  const Cocycle r = restrict_to_gamma1(s);
  for (const auto& psi : enumerate_characters(9, false)) CHECK(project(r, psi, SL2Matrix::identity()).is_zero());

  const SL2Matrix g(10, 1, 9, 1);
  CHECK(in_gamma1(9, g));
  CHECK(same_value(project(r, c.psi(), g), s(g)));
  CHECK_THROWS_AS(r(SL2Matrix(2, 1, 9, 5)), DomainError);
  CHECK_THROWS_AS(project(r, c.psi(), SL2Matrix::S()), DomainError);
  CHECK_THROWS_AS(project(r, DirichletCharacter::parse("3:[1]"), g), DomainError);
}

TEST_CASE("coboundary constants") {
  const auto c = ctx("3:[1]", "3:[1]");
  for (const auto& psi : enumerate_characters(9, false)) {
    CHECK(coboundary_constant(constant_cocycle(9, Cyclotomic::zero(1)), psi).is_zero());
    if (!psi.is_trivial()) CHECK(coboundary_constant(constant_cocycle(9, Cyclotomic::one(1)), psi).is_zero());
  }
  const BetaReps betas(9);
  Cyclotomic avg = Cyclotomic::zero(2);
  for (std::int64_t j : betas.units()) avg += newform_sum_matrix(c, betas[j]);
  avg = avg * Rational(1, 6);
  CHECK(same_value(coboundary_constant(sum_cocycle(c), c.psi()), avg));

  const Coboundary cb{Cyclotomic::constant(2, Rational(3)), DirichletCharacter::parse("9:[3]")};
  CHECK(cb(SL2Matrix(1, 0, 9, 1)).is_zero());
  CHECK_FALSE(cb(SL2Matrix(5, 1, 9, 2)).is_zero());
}

TEST_CASE("projections split off the central character") {
  Rng rng(21);
  for (const auto& c : {ctx("3:[1]", "3:[1]"), ctx("3:[1]", "4:[1]"), ctx("3:[1]", "5:[1]")}) {
    const auto tests = sample_gamma0(c.level(), 20, rng);
    const Cocycle s = memoized(sum_cocycle(c));
    std::size_t central = 0;
    for (const auto& psi : enumerate_characters(c.level(), false)) {
      CAPTURE(psi.label());
      const auto rep = verify_split(c, s, psi, tests);
      CHECK(rep.passed());
      CHECK(rep.checked == tests.size());
      if (rep.central) ++central;
    }
    CHECK(central == 1);
  }
  const auto c = ctx("3:[1]", "3:[1]");
  const auto g1 = sample_gamma1(9, 10, rng);
  const Cocycle s = sum_cocycle(c);
  for (const auto& g : g1) CHECK(same_value(project(restrict_to_gamma1(s), c.psi(), g), s(g)));
}

TEST_CASE("projections are psi-crossed homomorphisms") {
  const auto c = ctx("3:[1]", "5:[1]");
  const Cocycle r = memoized(restrict_to_gamma1(sum_cocycle(c)));
  const BetaReps betas(15);
  Rng rng(4);
  const auto chars = enumerate_characters(15, false);
  for (int i = 0; i < 5; ++i) {
    const SL2Matrix g1 = random_gamma0(15, rng, 60), g2 = random_gamma0(15, rng, 60);
    for (const auto& psi : chars) {
      const auto lhs = project(r, psi, g1 * g2, betas);
      const auto rhs = project(r, psi, g1, betas) + psi.value(g1.d()) * project(r, psi, g2, betas);
      CHECK(same_value(lhs, rhs));
    }
  }
}

TEST_CASE("decomposition") {
  const auto c = ctx("3:[1]", "3:[1]");
  const Cocycle r = restrict_to_gamma1(sum_cocycle(c));
  const SL2Matrix tests[] = {SL2Matrix(1, 0, 9, 1), SL2Matrix(10, 1, 9, 1)};
  CHECK(r(tests[0]).is_zero());
  const auto rep = verify_decomposition(r, 9, tests);
  CHECK(rep.passed());
  CHECK(rep.characters == 6);
  CHECK(verify_decomposition(restrict_to_gamma1(constant_cocycle(9, Cyclotomic::zero(1))), 9, tests).passed());

  Rng rng(8);
  for (const auto& cc : {ctx("4:[1]", "3:[1]"), ctx("5:[1]", "3:[1]")}) {
    const auto g1 = sample_gamma1(cc.level(), 10, rng);
    const auto d = verify_decomposition(memoized(restrict_to_gamma1(sum_cocycle(cc))), cc.level(), g1);
    CHECK(d.passed());
    CHECK(d.checked == g1.size());
  }
}
