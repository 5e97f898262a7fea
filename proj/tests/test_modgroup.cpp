#include <doctest.h>

#include "core/arith.hpp"
#include "core/errors.hpp"
#include "core/modgroup.hpp"
#include "core/sampling.hpp"
#include "core/serialize.hpp"

using namespace dks;

TEST_CASE("matrix basics") {
  const SL2Matrix g(2, 1, 9, 5);
  CHECK(g * g.inverse() == SL2Matrix::identity());
  CHECK(SL2Matrix::S() * SL2Matrix::S() == -SL2Matrix::identity());
  CHECK(SL2Matrix::T(3) == SL2Matrix::T() * SL2Matrix::T() * SL2Matrix::T());
  CHECK(g.str() == "[[2,1],[9,5]]");
  CHECK_THROWS_AS(SL2Matrix(1, 1, 1, 1), DomainError);
  CHECK(matrix_from_string("[[2,1],[9,5]]") == g);
  CHECK(matrix_to_json(g).dump() == "[[2,1],[9,5]]");
  CHECK_THROWS_AS(matrix_from_string("[[2,1],[9]]"), ParseError);
  CHECK_THROWS_AS(matrix_from_string("[[2,1],[9,x]]"), ParseError);
  CHECK_THROWS_AS(matrix_from_string("[[2,1],[9,4]]"), DomainError);
}

TEST_CASE("classify") {
  const auto id = classify(9, SL2Matrix::identity().mat());
  CHECK((id.sl2 && id.gamma0 && id.gamma1));
  CHECK(in_gamma1(9, SL2Matrix(1, 0, 9, 1)));
  const auto g = classify(9, Mat2{2, 1, 9, 5});
  CHECK(g.gamma0);
  CHECK_FALSE(g.gamma1);
  CHECK_THROWS_AS(classify(9, Mat2{2, 0, 0, 1}), DomainError);
}

TEST_CASE("S/T words") {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const SL2Matrix g = random_gamma0(7, rng);
    CHECK(evaluate_word(st_word(g)) == g);
  }
  CHECK(evaluate_word(st_word(-SL2Matrix::identity())) == -SL2Matrix::identity());
  CHECK(evaluate_word(st_word(SL2Matrix::T(-4))) == SL2Matrix::T(-4));
}

TEST_CASE("coset tables") {
  CHECK(coset_table(9).size() == 72);
  CHECK(coset_table(12).size() == 96);
  for (std::int64_t N : {3, 4, 5, 9, 12, 15, 16, 20, 21, 25}) {
    CAPTURE(N);
    const CosetTable t(N);
    std::int64_t formula = N * N;
    for (const auto& f : factorize(N)) formula = formula / (f.p * f.p) * (f.p * f.p - 1);
    CHECK(static_cast<std::int64_t>(t.size()) == formula);
    CHECK(gamma1_index(N) == formula);
    for (std::size_t r = 0; r < t.size(); ++r) {
      CHECK(t.s_image(t.s_image(t.s_image(t.s_image(r)))) == r);
      CHECK(t.coset_of(t.rep(r) * SL2Matrix::S()) == t.s_image(r));
      CHECK(t.coset_of(t.rep(r) * SL2Matrix::T()) == t.t_image(r));
      CHECK(t.t_preimage(t.t_image(r)) == r);
    }
  }
  CHECK_THROWS_AS(coset_table(2), DomainError);
}

TEST_CASE("Schreier generators") {
  for (std::int64_t N : {9, 12, 15}) {
    CAPTURE(N);
    const SchreierGenerators sg(N);
    CHECK(sg.raw_count() == 2 * sg.table().size());
    // at most one generator per non-tree edge
    CHECK(sg.generators().size() <= sg.table().size() + 1);
    for (const auto& g : sg.generators()) {
      CHECK(in_gamma1(N, g));
      CHECK(g != SL2Matrix::identity());
      CHECK(sg.table().trace(st_word(g)) == 0);
    }
    CHECK(sg.table().trace(st_word(SL2Matrix::T())) == 0);

    // the generators generate: rewriting reproduces random elements of Gamma1(N)
    Rng rng(N);
    auto check_rewrite = [&](const SL2Matrix& m) {
      SL2Matrix prod;
      for (auto [idx, sign] : sg.rewrite(m))
        prod = prod * (sign > 0 ? sg.generators()[idx] : sg.generators()[idx].inverse());
      CHECK(prod == m);
    };
    check_rewrite(SL2Matrix::T());
    check_rewrite(SL2Matrix(1, 0, N, 1));
    for (int i = 0; i < 30; ++i) check_rewrite(random_gamma1(N, rng));
    CHECK_THROWS_AS(sg.rewrite(SL2Matrix(2, 1, 9, 5)), DomainError);
  }
  const SchreierGenerators nine(9);
  CHECK(nine.generators().size() == schreier_generators(9).size());
}

TEST_CASE("beta representatives") {
  const BetaReps b(9);
  CHECK(b[1] == SL2Matrix::identity());
  CHECK(b[2].d() == 2);
  CHECK(in_gamma0(9, b[2]));
  CHECK(b[2] == SL2Matrix(5, 1, 9, 2));
  CHECK(b.units().size() == 6);
  CHECK_THROWS_AS(b[3], DomainError);
  const auto reps = gamma0_coset_reps(9);
  CHECK(reps.size() == 6);
  for (const auto& [j, beta] : reps) CHECK(mod(beta.d(), 9) == j);
}

TEST_CASE("coset permutation") {
  const SL2Matrix g(2, 1, 9, 5);
  const auto sigma = coset_permutation(9, g);
  const BetaReps b(9);
  for (const auto& [j, sj] : sigma) {
    CHECK(sj == mod(5 * j, 9));
    CHECK(in_gamma1(9, b[j] * g * b[sj].inverse()));
  }
  for (const auto& [j, sj] : coset_permutation(9, SL2Matrix(1, 0, 9, 1))) CHECK(sj == j);
  for (const auto& [j, sj] : coset_permutation(9, -SL2Matrix::identity())) CHECK(sj == mod(-j, 9));
  CHECK_THROWS_AS(coset_permutation(9, SL2Matrix::S()), DomainError);

  for (std::int64_t N : {9, 12, 15, 25}) {
    Rng rng(100 + N);
    const BetaReps bn(N);
    for (int i = 0; i < 50; ++i) {
      const SL2Matrix g1 = random_gamma0(N, rng), g2 = random_gamma0(N, rng);
      CHECK(in_gamma0(N, g1));
      const auto s1 = coset_permutation(N, g1), s2 = coset_permutation(N, g2);
      const auto s12 = coset_permutation(N, g1 * g2);
      for (const auto& [j, sj] : s1) {
        CHECK(in_gamma1(N, bn[j] * g1 * bn[sj].inverse()));
        CHECK(s12.at(j) == s2.at(sj));
      }
    }
  }
}

TEST_CASE("sampling is reproducible and lands in the right group") {
  Rng a(42), b(42);
  for (int i = 0; i < 20; ++i) CHECK(random_gamma0(15, a) == random_gamma0(15, b));
  Rng c(9);
  for (const auto& g : sample_gamma1(12, 40, c)) CHECK(in_gamma1(12, g));
  bool saw_non_gamma1 = false;
  for (const auto& g : sample_gamma0(12, 40, c)) {
    CHECK(in_gamma0(12, g));
    saw_non_gamma1 = saw_non_gamma1 || !in_gamma1(12, g);
  }
  CHECK(saw_non_gamma1);
}
