#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "dedekind_sum.hpp"

namespace dks {

using IntMatrix = std::vector<std::vector<BigInt>>;

struct ClearedValues {
  BigInt denominator;
  IntMatrix rows;
};

/// d = lcm of all coefficient denominators, rows = d * values. All values must
/// share one order.
ClearedValues clear_denominators(std::span<const Cyclotomic> values);

struct HermiteForm {
  IntMatrix basis;
  std::size_t rank;
};

/// Row-style Hermite normal form of the integer row span: pivot columns
/// strictly increasing, pivots positive, entries above a pivot in [0, pivot).
HermiteForm hnf(IntMatrix rows);

/// { (1/d) * (integer combination of basis rows) } in the power basis of zeta_M.
class Lattice {
public:
  static Lattice from_values(std::int64_t field_order, std::span<const Cyclotomic> values);

  std::int64_t field_order() const { return field_order_; }
  int degree() const { return degree_; }
  const BigInt& denominator() const { return denominator_; }
  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }

  bool contains(const Cyclotomic& v) const;
  /// Basis row i read back as a field element.
  Cyclotomic element(std::size_t i) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

private:
  std::int64_t field_order_ = 1;
  int degree_ = 1;
  BigInt denominator_ = 1;
  IntMatrix basis_;
};

struct ImageLattice {
  Lattice lattice;
  std::size_t generator_count;
  std::vector<Cyclotomic> generator_values;
};

/// S on the Schreier generators of Gamma1(N), cleared and put in HNF.
/// Throws TheoremViolation when the rank falls short of phi(M).
ImageLattice image_lattice(const SumContext& ctx);
ImageLattice image_lattice(const SumContext& ctx, const SchreierGenerators& gens);

bool lattice_contains(const Lattice& lattice, const Cyclotomic& v);

/// offset_j = S(beta_j) for every unit j mod N.
std::map<std::int64_t, Cyclotomic> gamma0_offsets(const SumContext& ctx, const Lattice& lattice);

/// Rank over Q(zeta_L) of the matrix of sum values on the Schreier
/// generators; all contexts must share N.
std::size_t independence_rank(std::span<const SumContext> contexts);

} // namespace dks
