#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cyclotomic.hpp"

namespace dks {

struct UnitGenerator {
  std::int64_t residue;
  std::int64_t order;
  friend bool operator==(const UnitGenerator&, const UnitGenerator&) = default;
};

/// Canonical generators of (Z/qZ)^x with a discrete-log table.
class UnitGroupBasis {
public:
  std::int64_t modulus() const { return q_; }
  const std::vector<UnitGenerator>& generators() const { return gens_; }
  /// Exponent tuple of n on the generators; empty span when gcd(n, q) > 1.
  std::span<const std::int64_t> log(std::int64_t n) const;
  bool is_unit(std::int64_t n) const;

  friend bool operator==(const UnitGroupBasis& a, const UnitGroupBasis& b) {
    return a.q_ == b.q_ && a.gens_ == b.gens_;
  }

private:
  friend UnitGroupBasis unit_group_generators(std::int64_t q);

  std::int64_t q_ = 1;
  std::vector<UnitGenerator> gens_;
  // logs_[n * gens_.size() + i]; unit_[n] false for non-units
  std::shared_ptr<const std::vector<std::int64_t>> logs_;
  std::shared_ptr<const std::vector<bool>> unit_;
};

/// Memoized per modulus.
UnitGroupBasis unit_group_generators(std::int64_t q);

/// Dirichlet character given by exponents a_i with chi(g_i) = zeta_{e_i}^{a_i}.
class DirichletCharacter {
public:
  DirichletCharacter(UnitGroupBasis basis, std::vector<std::int64_t> exponents);

  std::int64_t modulus() const { return basis_.modulus(); }
  const UnitGroupBasis& basis() const { return basis_; }
  const std::vector<std::int64_t>& exponents() const { return exps_; }
  std::int64_t order() const { return order_; }

  /// chi(n) = zeta_order^k, returns k in [0, order), or -1 when gcd(n, q) > 1.
  std::int64_t value_exponent(std::int64_t n) const;
  /// chi(n) in Q(zeta_order).
  Cyclotomic value(std::int64_t n) const;
  /// chi(-1) as +1 or -1.
  int parity() const;
  bool is_trivial() const { return order_ == 1; }

  std::int64_t conductor() const;
  bool is_primitive() const { return conductor() == modulus(); }

  DirichletCharacter conj() const;
  DirichletCharacter pow(std::int64_t t) const;

  /// "q:[a1,a2,...]"
  std::string label() const;
  static DirichletCharacter parse(std::string_view label);

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.basis_ == b.basis_ && a.exps_ == b.exps_;
  }

private:
  UnitGroupBasis basis_;
  std::vector<std::int64_t> exps_;
  std::int64_t order_;
  std::shared_ptr<const std::vector<std::int64_t>> table_;
};

std::vector<DirichletCharacter> enumerate_characters(std::int64_t q, bool primitive_only);
Cyclotomic char_value(const DirichletCharacter& chi, std::int64_t n);
std::int64_t conductor(const DirichletCharacter& chi);
/// Pointwise product of the lifts of a and b to target_modulus.
DirichletCharacter char_mul(const DirichletCharacter& a, const DirichletCharacter& b,
                            std::int64_t target_modulus);
/// chi^t; gcd(t, order) must be 1.
DirichletCharacter char_galois(const DirichletCharacter& chi, std::int64_t t);
/// sum_{a mod q} chi(a) zeta_q^a in Q(zeta_lcm(q, order)).
Cyclotomic gauss_sum(const DirichletCharacter& chi);

} // namespace dks
