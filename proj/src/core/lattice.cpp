#include "lattice.hpp"

#include "arith.hpp"
#include "errors.hpp"

namespace dks {

ClearedValues clear_denominators(std::span<const Cyclotomic> values) {
  ClearedValues out{1, {}};
  if (values.empty()) return out;
  const std::int64_t order = values.front().order();
  for (const auto& v : values) {
    if (v.order() != order) throw DomainError("clear_denominators: mixed field orders");
    for (const auto& c : v.coeffs()) {
      const BigInt den = c.den();
      mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), den.get_mpz_t());
    }
  }
  for (const auto& v : values) {
    std::vector<BigInt> row;
    row.reserve(v.coeffs().size());
    for (const auto& c : v.coeffs()) row.push_back(c.num() * (out.denominator / c.den()));
    out.rows.push_back(std::move(row));
  }
  return out;
}

HermiteForm hnf(IntMatrix rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m ? rows.front().size() : 0;
  std::size_t top = 0;
  for (std::size_t col = 0; col < n && top < m; ++col) {
    bool have_pivot = false;
    while (true) {
      std::size_t best = m;
      for (std::size_t r = top; r < m; ++r) {
        if (rows[r][col] == 0) continue;
        if (best == m || abs(rows[r][col]) < abs(rows[best][col])) best = r;
      }
      if (best == m) break;
      have_pivot = true;
      std::swap(rows[top], rows[best]);
      bool cleared = true;
      for (std::size_t r = top + 1; r < m; ++r) {
        if (rows[r][col] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
        for (std::size_t c = col; c < n; ++c) rows[r][c] -= q * rows[top][c];
        if (rows[r][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (rows[top][col] < 0)
      for (std::size_t c = col; c < n; ++c) rows[top][c] = -rows[top][c];
    for (std::size_t r = 0; r < top; ++r) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= q * rows[top][c];
    }
    ++top;
  }
  rows.resize(top);
  return {std::move(rows), top};
}

Lattice Lattice::from_values(std::int64_t field_order, std::span<const Cyclotomic> values) {
  std::vector<Cyclotomic> lifted;
  lifted.reserve(values.size());
  for (const auto& v : values) lifted.push_back(v.lift(field_order));
  auto cleared = clear_denominators(lifted);
  Lattice l;
  l.field_order_ = field_order;
  l.degree_ = cyclotomic_field(field_order).degree;
  l.denominator_ = cleared.denominator;
  l.basis_ = hnf(std::move(cleared.rows)).basis;
  return l;
}

bool Lattice::contains(const Cyclotomic& v) const {
  if (v.order() != field_order_) throw DomainError("lattice_contains: field order mismatch");
  std::vector<BigInt> w;
  for (const auto& c : v.coeffs()) {
    Rational scaled = c * Rational(denominator_);
    if (!scaled.is_integer()) return false;
    w.push_back(scaled.num());
  }
  for (const auto& row : basis_) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    for (std::size_t c = 0; c < p; ++c)
      if (w[c] != 0) return false;
    if (!mpz_divisible_p(w[p].get_mpz_t(), row[p].get_mpz_t())) return false;
    const BigInt x = w[p] / row[p];
    for (std::size_t c = p; c < w.size(); ++c) w[c] -= x * row[c];
  }
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

Cyclotomic Lattice::element(std::size_t i) const {
  std::vector<Rational> c;
  for (const auto& x : basis_.at(i)) c.emplace_back(x, denominator_);
  return Cyclotomic::from_poly(field_order_, c);
}

bool lattice_contains(const Lattice& lattice, const Cyclotomic& v) { return lattice.contains(v); }

ImageLattice image_lattice(const SumContext& ctx, const SchreierGenerators& gens) {
  if (gens.table().level() != ctx.level()) throw DomainError("image_lattice: generator level mismatch");
  std::vector<Cyclotomic> values;
  values.reserve(gens.generators().size());
  for (const auto& g : gens.generators()) values.push_back(newform_sum_matrix(ctx, g));
  Lattice l = Lattice::from_values(ctx.field_order(), values);
  if (static_cast<int>(l.rank()) != ctx.degree())
    throw TheoremViolation("image lattice of " + ctx.chi1().label() + " x " + ctx.chi2().label() +
                           " has rank " + std::to_string(l.rank()) + " < " +
                           std::to_string(ctx.degree()));
  return {std::move(l), gens.generators().size(), std::move(values)};
}

ImageLattice image_lattice(const SumContext& ctx) {
  return image_lattice(ctx, SchreierGenerators(coset_table(ctx.level())));
}

std::map<std::int64_t, Cyclotomic> gamma0_offsets(const SumContext& ctx, const Lattice& lattice) {
  if (lattice.field_order() != ctx.field_order())
    throw DomainError("gamma0_offsets: lattice field does not match the context");
  const BetaReps betas(ctx.level());
  std::map<std::int64_t, Cyclotomic> out;
  for (std::int64_t j : betas.units()) out.emplace(j, newform_sum_matrix(ctx, betas[j]));
  return out;
}

std::size_t independence_rank(std::span<const SumContext> contexts) {
  if (contexts.empty()) return 0;
  const std::int64_t level = contexts.front().level();
  std::int64_t order = 1;
  for (const auto& c : contexts) {
    if (c.level() != level) throw DomainError("independence_rank: contexts must share N");
    order = lcm(order, c.field_order());
  }
  const auto gens = schreier_generators(level);
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& c : contexts) {
    std::vector<Cyclotomic> row;
    row.reserve(gens.size());
    for (const auto& g : gens) row.push_back(newform_sum_matrix(c, g).lift(order));
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < gens.size() && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const Cyclotomic inv = rows[rank][col].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Cyclotomic f = rows[r][col] * inv;
      for (std::size_t c = col; c < gens.size(); ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

} // namespace dks
