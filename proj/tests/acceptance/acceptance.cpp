// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "core/arith.hpp"
#include "core/cohomology.hpp"
#include "core/hecke.hpp"
#include "core/lattice.hpp"
#include "core/sampling.hpp"
#include "dedekind/dedekind.h"
#include "oracle.hpp"

using namespace dks;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Outcome of one criterion: a summary and the first failure seen.
struct Outcome {
  std::size_t cases = 0;
  std::string failure;
  std::string note;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok && failure.empty()) failure = what();
  }
};

std::string name(const SumContext& c) { return "(" + c.chi1().label() + "," + c.chi2().label() + ")"; }

// The admissible pairs for the listed moduli, built directly from the character lists.
std::vector<SumContext> contexts() {
  const std::pair<std::int64_t, std::int64_t> moduli[] = {{3, 3}, {3, 4}, {4, 3}, {3, 5}, {5, 3},
                                                          {4, 5}, {5, 4}, {5, 5}, {3, 7}, {7, 3}};
  std::vector<SumContext> out;
  for (auto [q1, q2] : moduli)
    for (const auto& a : enumerate_characters(q1, true))
      for (const auto& b : enumerate_characters(q2, true)) {
        if (!same_value(a.value(-1) * b.value(-1), Cyclotomic::one(1))) continue;
        out.push_back(make_context(a, b));
      }
  return out;
}

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.failure = std::string("exception: ") + e.what();
  }
  const bool ok = o.failure.empty();
  if (!ok) ++failures;
  std::printf("%s %2d %s: %zu checks, %.1fs%s%s%s\n", ok ? "PASS" : "FAIL", id, title, o.cases, since(t0),
              o.note.empty() ? "" : ", ", o.note.c_str(), ok ? "" : (" -- " + o.failure).c_str());
  std::fflush(stdout);
}

} // namespace

int main() {
  const auto ctxs = contexts();
  std::printf("contexts: %zu\n", ctxs.size());

  criterion(1, "pinned values", [] {
    Outcome o;
    const auto chi3 = oracle::make_char(3, 1);
    const auto c = make_context(DirichletCharacter::parse("3:[1]"), DirichletCharacter::parse("3:[1]"));
    const Rational b = Rational(7, 3);
    o.expect(oracle::sawtooth(b) == Rational(-1, 6) && b1(b) == Rational(-1, 6), [] { return "b1(7/3)"; });
    o.expect(oracle::dedekind(1, 3) == Rational(1, 18) && classical_sum(1, 3) == Rational(1, 18),
             [] { return "s(1,3)"; });
    o.expect(oracle::dedekind(2, 3) == Rational(-1, 18) && classical_sum(2, 3) == Rational(-1, 18),
             [] { return "s(2,3)"; });
    o.expect(oracle::newform_sum(chi3, chi3, 1, 9).is_zero() && newform_sum_hk(c, 1, 9).is_zero(),
             [] { return "S(1,9)"; });
    const auto two_thirds = Cyclotomic::constant(2, Rational(2, 3));
    o.expect(same_value(oracle::newform_sum(chi3, chi3, 2, 9), two_thirds) &&
                 newform_sum_hk(c, 2, 9) == two_thirds,
             [] { return "S(2,9)"; });
    return o;
  });

  criterion(2, "classical Knopp, 1 <= h <= k <= 20, n <= 12", [] {
    Outcome o;
    for (std::int64_t k = 1; k <= 20; ++k)
      for (std::int64_t h = 1; h <= k; ++h)
        for (std::int64_t n = 1; n <= 12; ++n) {
          const auto r = knopp_check_classical(h, k, n);
          o.expect(r.equal, [&] { return "h=" + std::to_string(h) + " k=" + std::to_string(k) + " n=" + std::to_string(n); });
        }
    return o;
  });

  criterion(3, "generalized Knopp", [&] {
    Outcome o;
    std::set<std::int64_t> ns;
    std::size_t discriminating = 0;
    for (std::size_t i = 0; i < ctxs.size(); ++i) {
      const auto& c = ctxs[i];
      const std::int64_t N = c.level();
      Rng rng(1000 + i);
      for (std::int64_t k : {N, 2 * N})
        for (int s = 0; s < 10; ++s) {
          const std::int64_t h = rng.uniform(0, k - 1);
          for (std::int64_t n = 1; n <= 10; ++n) {
            if (gcd(n, N) != 1) continue;
            ns.insert(n);
            const auto r = knopp_check_newform(c, h, k, n);
            o.expect(r.equal, [&] {
              return name(c) + " h=" + std::to_string(h) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
            });
            // the a-sum restricted to gcd(a, n) = 1 instead
            Cyclotomic alt = Cyclotomic::zero(c.field_order());
            for (std::int64_t a : divisors(n)) {
              if (gcd(a, n) != 1 || gcd(a, N) != 1) continue;
              for (std::int64_t bb = 0; bb < n / a; ++bb)
                alt += c.psi().value(a) * newform_sum_hk(c, a * h + bb * k, (n / a) * k);
            }
            if (!same_value(alt, r.lhs)) ++discriminating;
          }
        }
    }
    o.expect(ns.count(4) && ns.count(9), [] { return "n = 4 and n = 9 not both exercised"; });
    o.expect(discriminating > 0, [] { return "no case separates the two readings"; });
    o.note = std::to_string(discriminating) + " cases where gcd(a,n) would differ";
    return o;
  });

  criterion(4, "crossed homomorphism", [&] {
    Outcome o;
    for (std::size_t i = 0; i < ctxs.size(); ++i) {
      const auto& c = ctxs[i];
      Rng rng(2000 + i);
      for (int s = 0; s < 50; ++s) {
        const SL2Matrix g1 = random_gamma0(c.level(), rng), g2 = random_gamma0(c.level(), rng);
        const auto lhs = newform_sum_matrix(c, g1 * g2);
        const auto rhs = newform_sum_matrix(c, g1) + psi_of(c, g1) * newform_sum_matrix(c, g2);
        o.expect(lhs == rhs, [&] { return name(c) + " " + g1.str() + " " + g2.str(); });
      }
    }
    return o;
  });

  criterion(5, "scaling", [&] {
    Outcome o;
    for (std::size_t i = 0; i < ctxs.size(); ++i) {
      const auto& c = ctxs[i];
      const std::int64_t N = c.level();
      Rng rng(3000 + i);
      for (int s = 0; s < 20;) {
        const std::int64_t k = N * rng.uniform(1, 3), h = rng.uniform(-k, 2 * k);
        if (gcd(h, k) != 1) continue;
        ++s;
        const auto base = newform_sum_hk(c, h, k);
        for (std::int64_t a = 1; a <= 5; ++a)
          o.expect(newform_sum_hk(c, a * h, a * k) == base, [&] {
            return name(c) + " h=" + std::to_string(h) + " k=" + std::to_string(k) + " alpha=" + std::to_string(a);
          });
      }
    }
    return o;
  });

  criterion(6, "Galois equivariance", [&] {
    Outcome o;
    for (std::size_t i = 0; i < ctxs.size(); ++i) {
      const auto& c = ctxs[i];
      Rng rng(4000 + i);
      std::vector<SL2Matrix> gs;
      for (int s = 0; s < 20; ++s) gs.push_back(random_gamma0(c.level(), rng));
      for (std::int64_t t : units_mod(c.field_order())) {
        const auto tc = galois_transport(c, t);
        for (const auto& g : gs)
          o.expect(newform_sum_matrix(c, g).galois(t) == newform_sum_matrix(tc, g),
                   [&] { return name(c) + " t=" + std::to_string(t) + " " + g.str(); });
      }
    }
    return o;
  });

  std::vector<ImageLattice> images;
  criterion(7, "full-rank image lattices", [&] {
    Outcome o;
    double slowest = 0;
    for (const auto& c : ctxs) {
      const auto t0 = Clock::now();
      images.push_back(image_lattice(c));
      slowest = std::max(slowest, since(t0));
      const auto& L = images.back().lattice;
      const auto q = [&](const DirichletCharacter& x) { return x.modulus(); };
      const std::int64_t expected = euler_phi(std::lcm(c.chi1().order(), c.chi2().order()));
      o.expect(L.rank() == static_cast<std::size_t>(expected) && L.rank() == static_cast<std::size_t>(c.degree()),
               [&] { return name(c) + " rank " + std::to_string(L.rank()); });
      if (q(c.chi1()) <= 4 && q(c.chi2()) <= 4) o.expect(L.rank() == 1, [&] { return name(c) + " not degree 1"; });
      o.expect(since(t0) < 60, [&] { return name(c) + " took over a minute"; });
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "slowest context %.2fs", slowest);
    o.note = buf;
    return o;
  });

  criterion(8, "Gamma0 offsets", [&] {
    Outcome o;
    for (std::size_t i = 0; i < ctxs.size(); ++i) {
      const auto& c = ctxs[i];
      const auto L = i < images.size() ? images[i].lattice : image_lattice(c).lattice;
      const auto off = gamma0_offsets(c, L);
      const BetaReps betas(c.level());
      Rng rng(5000 + i);
      for (int s = 0; s < 100; ++s) {
        const SL2Matrix g = random_gamma0(c.level(), rng);
        const std::int64_t j = mod(g.d(), c.level());
        const auto value = newform_sum_matrix(c, g);
        // S(g) = S(beta_j) + psi(j) S(beta_j^-1 g) with beta_j^-1 g in Gamma1(N)
        const SL2Matrix rest = betas[j].inverse() * g;
        const auto twisted = off.at(j) + c.psi().value(j) * newform_sum_matrix(c, rest);
        o.expect(in_gamma1(c.level(), rest) && same_value(value, twisted) && L.contains(value - off.at(j)),
                 [&] { return name(c) + " " + g.str(); });
      }
    }
    return o;
  });

  criterion(9, "independence", [&] {
    Outcome o;
    std::vector<SumContext> fifteen;
    for (const auto& c : ctxs)
      if (c.level() == 15) fifteen.push_back(c);
    o.expect(fifteen.size() == 4, [&] { return std::to_string(fifteen.size()) + " sums at N=15"; });
    o.expect(independence_rank(fifteen) == 4, [] { return "N=15 family rank"; });
    const SumContext dup[] = {fifteen[0], fifteen[0]};
    o.expect(independence_rank(dup) == 1, [] { return "duplicate rows"; });
    const SumContext twice[] = {fifteen[0], fifteen[1], fifteen[0]};
    o.expect(independence_rank(twice) == 2, [] { return "duplicate in a larger family"; });
    return o;
  });

  criterion(10, "cohomology split and decomposition", [&] {
    Outcome o;
    for (std::size_t i = 0; i < ctxs.size(); ++i) {
      const auto& c = ctxs[i];
      const std::int64_t N = c.level();
      if (N != 9 && N != 12 && N != 15) continue;
      Rng rng(6000 + i);
      const auto tests = sample_gamma0(N, 50, rng);
      const Cocycle s = memoized(sum_cocycle(c));
      std::size_t central = 0;
      for (const auto& psi : enumerate_characters(N, false)) {
        const auto rep = verify_split(c, s, psi, tests);
        central += rep.central;
        o.expect(rep.passed() && rep.checked == tests.size(), [&] {
          return name(c) + " psi=" + psi.label() + (rep.failures.empty() ? "" : " " + rep.failures[0].gamma.str());
        });
      }
      o.expect(central == 1, [&] { return name(c) + " central character not found"; });
      const auto g1 = sample_gamma1(N, 25, rng);
      const auto dec = verify_decomposition(restrict_to_gamma1(s), N, g1);
      o.expect(dec.passed() && dec.checked == 25, [&] { return name(c) + " decomposition"; });
    }
    return o;
  });

  criterion(11, "rationality", [&] {
    Outcome o;
    for (std::size_t i = 0; i < ctxs.size(); ++i) {
      const auto& c = ctxs[i];
      const auto& values = i < images.size() ? images[i].generator_values : image_lattice(c).generator_values;
      std::size_t irrational = 0;
      for (const auto& v : values) irrational += !v.is_rational();
      if (c.field_order() <= 2) {
        std::size_t converted = 0;
        for (const auto& v : values) {
          cyclo_as_rational(v);
          ++converted;
        }
        o.expect(converted == values.size(), [&] { return name(c); });
      } else if (c.field_order() == 4 || c.field_order() == 6) {
        o.expect(irrational > 0, [&] { return name(c) + " has only rational values"; });
      }
    }
    return o;
  });

  criterion(12, "Gamma1 index formula", [] {
    Outcome o;
    for (std::int64_t N : {9, 12, 15, 16, 20, 21, 25}) {
      Rational expected(N * N);
      for (std::int64_t p = 2; p <= N; ++p)
        if (N % p == 0 && euler_phi(p) == p - 1) expected = expected * (Rational(1) - Rational(1, p * p));
      o.expect(Rational(static_cast<std::int64_t>(coset_table(N).size())) == expected,
               [&] { return "N=" + std::to_string(N); });
    }
    return o;
  });

  criterion(13, "Gauss sums", [] {
    Outcome o;
    for (std::int64_t q = 1; q <= 24; ++q)
      for (const auto& chi : enumerate_characters(q, true)) {
        const auto prod = gauss_sum(chi) * gauss_sum(chi.conj());
        o.expect(same_value(prod, chi.value(-1) * Cyclotomic::constant(1, Rational(q))),
                 [&] { return chi.label(); });
      }
    return o;
  });

  criterion(14, "verify all, single-threaded, under 10 minutes", [] {
    Outcome o;
    dks_verify_options opts;
    dks_verify_options_init(&opts);
    opts.jobs = 1;
    int passed = 0;
    const auto t0 = Clock::now();
    const dks_status st = dks_verify("all", &opts, nullptr, nullptr, &passed);
    const double secs = since(t0);
    o.expect(st == DKS_OK, [&] { return std::string(dks_status_name(st)) + ": " + dks_last_error(); });
    o.expect(passed == 1, [] { return "a suite failed"; });
    o.expect(secs < 600, [&] { return "took " + std::to_string(secs) + "s"; });
    return o;
  });

  std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria failed");
  return failures == 0 ? 0 : 1;
}
