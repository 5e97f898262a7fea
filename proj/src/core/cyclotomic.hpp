#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rational.hpp"

namespace dks {

/// Phi_n, memoized per process (thread-safe).
const IntPoly& cyclotomic_polynomial(std::int64_t n);

/// Precomputed data for Q(zeta_M): the reduction of every zeta^e, 0 <= e < M,
/// in the power basis {1, zeta, ..., zeta^(phi(M)-1)}.
struct CyclotomicField {
  std::int64_t order;
  int degree;
  IntPoly modulus;
  std::vector<std::vector<std::int64_t>> powers;
};

const CyclotomicField& cyclotomic_field(std::int64_t order);

/// Element of Q(zeta_M) in canonical power-basis form.
///
/// Arithmetic between elements of different orders lifts both operands to the
/// lcm of the orders. Equality is strict: equal order and equal coefficients.
class Cyclotomic {
public:
  Cyclotomic() : Cyclotomic(zero(1)) {}

  static Cyclotomic zero(std::int64_t order);
  static Cyclotomic one(std::int64_t order) { return constant(order, Rational(1)); }
  static Cyclotomic constant(std::int64_t order, const Rational& value);
  /// zeta_order^e
  static Cyclotomic root_of_unity(std::int64_t order, std::int64_t e);
  /// Reduces sum_i poly[i] * zeta^i modulo Phi_order.
  static Cyclotomic from_poly(std::int64_t order, std::span<const Rational> poly);
  /// sum_e weights[e] * zeta^e with weights indexed by exponent mod order.
  static Cyclotomic from_exponent_weights(std::int64_t order, std::span<const Rational> weights);

  std::int64_t order() const { return order_; }
  int degree() const { return static_cast<int>(c_.size()); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws NotRationalError unless every coefficient past index 0 vanishes.
  Rational as_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }

  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

  Cyclotomic inverse() const;
  /// Same value expressed at order m; order() must divide m.
  Cyclotomic lift(std::int64_t m) const;
  /// Same value expressed at order n | order(); throws DomainError when the
  /// element does not lie in Q(zeta_n).
  Cyclotomic descend(std::int64_t n) const;
  /// sigma_t: zeta -> zeta^t, gcd(t, order) = 1.
  Cyclotomic galois(std::int64_t t) const;
  Cyclotomic conj() const { return galois(-1); }
  /// Smallest n | order() with the element in Q(zeta_n), returned at that order.
  Cyclotomic minimal_order() const;

  std::string str() const;

private:
  Cyclotomic(std::int64_t order, std::vector<Rational> coeffs)
    : order_(order), c_(std::move(coeffs)) {}

  std::int64_t order_;
  std::vector<Rational> c_;
};

/// Values agree as field elements (orders may differ).
bool same_value(const Cyclotomic& a, const Cyclotomic& b);

// Named forms of the member operations.
inline Cyclotomic cyclo_make(std::int64_t order, std::span<const Rational> poly) {
  return Cyclotomic::from_poly(order, poly);
}
inline Cyclotomic cyclo_inv(const Cyclotomic& a) { return a.inverse(); }
inline Cyclotomic cyclo_lift(const Cyclotomic& a, std::int64_t m) { return a.lift(m); }
inline Cyclotomic cyclo_galois(const Cyclotomic& a, std::int64_t t) { return a.galois(t); }
inline Rational cyclo_as_rational(const Cyclotomic& a) { return a.as_rational(); }

} // namespace dks
