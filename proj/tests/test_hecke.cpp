#include <doctest.h>

#include "core/arith.hpp"
#include "core/errors.hpp"
#include "core/hecke.hpp"
#include "core/sampling.hpp"
#include "oracle.hpp"

using namespace dks;

namespace {

SumContext ctx(const char* a, const char* b) {
  return make_context(DirichletCharacter::parse(a), DirichletCharacter::parse(b));
}
Cyclotomic rat(std::int64_t p, std::int64_t q = 1) { return Cyclotomic::constant(2, Rational(p, q)); }

// Left side of the generalized identity for the quadratic pair mod 3, written
// out with the brute-force sum; `coprime_to` selects which gcd the a-sum uses.
Cyclotomic reference_lhs(std::int64_t h, std::int64_t k, std::int64_t n, std::int64_t coprime_to) {
  const auto chi = oracle::make_char(3, 1);
  Cyclotomic total = Cyclotomic::zero(2);
  for (std::int64_t a = 1; a <= n; ++a) {
    if (n % a != 0 || gcd(a, coprime_to) != 1 || gcd(a, 9) != 1) continue;
    const std::int64_t d = n / a;
    for (std::int64_t b = 0; b < d; ++b) total += oracle::newform_sum(chi, chi, a * h + b * k, d * k);
  }
  return total;
}

} // namespace

TEST_CASE("delta representatives") {
  CHECK(delta_reps(9, 2) == std::vector<UpperTriangular>{{1, 0, 2}, {1, 1, 2}, {2, 0, 1}});
  CHECK(delta_reps(9, 3) == std::vector<UpperTriangular>{{1, 0, 3}, {1, 1, 3}, {1, 2, 3}});
  const auto four = delta_reps(9, 4);
  CHECK(four.size() == 7);
  CHECK(four.back() == UpperTriangular{4, 0, 1});
  CHECK(delta_reps(9, 1) == std::vector<UpperTriangular>{{1, 0, 1}});
  CHECK_THROWS_AS(delta_reps(9, 0), DomainError);
}

TEST_CASE("coset correspondence") {
  const SL2Matrix g(2, 1, 9, 5);
  const auto id = hecke_decompose(9, {1, 0, 1}, g);
  CHECK(id.gamma == g);
  CHECK(id.delta == UpperTriangular{1, 0, 1});

  const auto dec = hecke_decompose(9, {1, 1, 2}, SL2Matrix(1, 0, 9, 1));
  CHECK(dec.gamma.a() == 5);
  CHECK(dec.gamma.c() == 9);
  CHECK(dec.gamma.mat() * dec.delta.mat() == Mat2{1, 1, 0, 2} * Mat2{1, 0, 9, 1});

  Rng rng(17);
  for (std::int64_t N : {9, 12, 15}) {
    for (int i = 0; i < 20; ++i) {
      const SL2Matrix gamma = random_gamma0(N, rng);
      for (std::int64_t n : {2, 4, 7, 8}) {
        const auto reps = delta_reps(N, n);
        std::vector<UpperTriangular> images;
        for (const auto& delta : reps) {
          const auto r = hecke_decompose(N, delta, gamma);
          CHECK(r.gamma.mat() * r.delta.mat() == delta.mat() * gamma.mat());
          CHECK(in_gamma0(N, r.gamma));
          CHECK(gcd(r.gamma.a(), r.gamma.c()) == 1);
          images.push_back(r.delta);
        }
        // delta -> delta' permutes the representatives
        std::sort(images.begin(), images.end(), [](auto& x, auto& y) {
          return std::tie(x.a, x.b) < std::tie(y.a, y.b);
        });
        CHECK(images == reps);
      }
    }
  }
  CHECK_THROWS_AS(hecke_decompose(9, {1, 0, 2}, SL2Matrix::S()), DomainError);
}

TEST_CASE("Hecke operator") {
  const auto c = ctx("3:[1]", "3:[1]");
  const SL2Matrix g(2, 1, 9, 5);
  CHECK(apply_hecke(c, 1, g) == newform_sum_matrix(c, g));
  CHECK(apply_hecke(c, 2, g) == rat(-2));
  CHECK(reference_lhs(2, 9, 2, 9) == rat(-2));
  for (std::int64_t n : {2, 3, 5, 7}) CHECK(apply_hecke(c, n, SL2Matrix::identity()).is_zero());

  for (const auto& cc : {c, ctx("3:[1]", "5:[1]"), ctx("5:[1]", "5:[3]")}) {
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
      const SL2Matrix gamma = random_gamma0(cc.level(), rng);
      for (std::int64_t n : {2, 4, 7})
        if (gcd(n, cc.level()) == 1) CHECK(apply_hecke(cc, n, gamma) == rho(cc, n) * newform_sum_matrix(cc, gamma));
    }
  }
}

TEST_CASE("classical Knopp") {
  const auto r = knopp_check_classical(1, 3, 2);
  CHECK(r.lhs == Rational(1, 6));
  CHECK(r.rhs == Rational(1, 6));
  CHECK(r.equal);
  CHECK(oracle::dedekind(1, 6) + oracle::dedekind(4, 6) + oracle::dedekind(2, 3) == Rational(1, 6));
  const auto z = knopp_check_classical(0, 5, 3);
  CHECK(z.lhs.is_zero());
  CHECK(z.equal);
  CHECK(knopp_check_classical(7, 11, 1).lhs == classical_sum(7, 11));
  for (std::int64_t k = 1; k <= 8; ++k)
    for (std::int64_t h = -k; h <= k; ++h)
      for (std::int64_t n = 1; n <= 6; ++n) CHECK(knopp_check_classical(h, k, n).equal);
  CHECK_THROWS_AS(knopp_check_classical(1, 0, 2), DomainError);
}

TEST_CASE("generalized Knopp") {
  const auto c = ctx("3:[1]", "3:[1]");
  const auto two = knopp_check_newform(c, 2, 9, 2);
  CHECK(two.equal);
  CHECK(two.rhs == rat(-2));
  CHECK(two.lhs == reference_lhs(2, 9, 2, 9));

  // n = 4: the a = 2 term is kept (gcd(2, 9) = 1) and the identity holds;
  // dropping it, as gcd(a, n) = 1 would, gives a different sum.
  const auto four = knopp_check_newform(c, 2, 9, 4);
  CHECK(four.equal);
  CHECK(four.lhs == reference_lhs(2, 9, 4, 9));
  CHECK(four.rhs == rat(14, 3));
  CHECK(reference_lhs(2, 9, 4, 4) == rat(8, 3));

  for (std::int64_t h = 0; h < 18; ++h)
    for (std::int64_t n : {1, 2, 4, 5, 7, 8, 10}) CHECK(knopp_check_newform(c, h, 18, n).equal);

  const auto c35 = ctx("3:[1]", "5:[1]");
  for (std::int64_t h = 0; h < 15; ++h)
    for (std::int64_t n : {1, 2, 4, 7, 8}) CHECK(knopp_check_newform(c35, h, 15, n).equal);

  CHECK_THROWS_AS(knopp_check_newform(c, 1, 10, 2), DomainError);
}
