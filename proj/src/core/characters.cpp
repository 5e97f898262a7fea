#include "characters.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "arith.hpp"
#include "errors.hpp"

namespace dks {

namespace {

std::mutex g_basis_mutex;
std::map<std::int64_t, UnitGroupBasis> g_bases;

std::int64_t multiplicative_order(std::int64_t g, std::int64_t m) {
  std::int64_t x = g % m, k = 1;
  while (x != 1) {
    x = x * g % m;
    ++k;
  }
  return k;
}

std::int64_t smallest_primitive_root(std::int64_t pe, std::int64_t phi) {
  for (std::int64_t g = 2; g < pe; ++g)
    if (gcd(g, pe) == 1 && multiplicative_order(g, pe) == phi) return g;
  throw InternalError("no primitive root found");
}

// x = r (mod pe), x = 1 (mod q / pe)
std::int64_t crt_lift(std::int64_t r, std::int64_t pe, std::int64_t q) {
  const std::int64_t rest = q / pe;
  if (rest == 1) return mod(r, q);
  const std::int64_t e1 = mul_checked(rest, mod_inverse(rest, pe)) % q;
  const std::int64_t e2 = mul_checked(pe, mod_inverse(pe, rest)) % q;
  return mod(mul_checked(mod(r, pe), e1) + e2, q);
}

} // namespace

std::span<const std::int64_t> UnitGroupBasis::log(std::int64_t n) const {
  const std::int64_t r = mod(n, q_);
  if (!(*unit_)[r]) return {};
  return std::span<const std::int64_t>(logs_->data() + r * gens_.size(), gens_.size());
}

bool UnitGroupBasis::is_unit(std::int64_t n) const { return (*unit_)[mod(n, q_)]; }

UnitGroupBasis unit_group_generators(std::int64_t q) {
  if (q < 1) throw DomainError("modulus must be positive");
  {
    std::lock_guard lock(g_basis_mutex);
    if (auto it = g_bases.find(q); it != g_bases.end()) return it->second;
  }

  UnitGroupBasis b;
  b.q_ = q;
  for (const auto& f : factorize(q)) {
    if (f.p == 2) {
      if (f.e >= 2) b.gens_.push_back({crt_lift(-1, f.pe, q), 2});
      if (f.e >= 3) b.gens_.push_back({crt_lift(5, f.pe, q), f.pe / 4});
    } else {
      const std::int64_t phi = f.pe / f.p * (f.p - 1);
      b.gens_.push_back({crt_lift(smallest_primitive_root(f.pe, phi), f.pe, q), phi});
    }
  }

  const std::size_t k = b.gens_.size();
  auto logs = std::make_shared<std::vector<std::int64_t>>(q * k, 0);
  auto unit = std::make_shared<std::vector<bool>>(q, false);
  std::vector<std::int64_t> tuple(k, 0);
  std::int64_t hits = 0;
  // mixed-radix walk over every exponent tuple
  while (true) {
    std::int64_t r = 1 % q;
    for (std::size_t i = 0; i < k; ++i)
      for (std::int64_t t = 0; t < tuple[i]; ++t) r = r * b.gens_[i].residue % q;
    if ((*unit)[r]) throw InternalError("unit group generators are not independent");
    (*unit)[r] = true;
    std::copy(tuple.begin(), tuple.end(), logs->begin() + r * k);
    ++hits;
    bool done = true;
    for (std::size_t i = k; i-- > 0;) {
      if (++tuple[i] < b.gens_[i].order) {
        done = false;
        break;
      }
      tuple[i] = 0;
    }
    if (done) break;
  }
  if (hits != euler_phi(q)) throw InternalError("unit group generators do not span");
  b.logs_ = std::move(logs);
  b.unit_ = std::move(unit);

  std::lock_guard lock(g_basis_mutex);
  g_bases.emplace(q, b);
  return b;
}

DirichletCharacter::DirichletCharacter(UnitGroupBasis basis, std::vector<std::int64_t> exponents)
  : basis_(std::move(basis)), exps_(std::move(exponents)), order_(1) {
  const auto& gens = basis_.generators();
  if (exps_.size() != gens.size())
    throw DomainError("character needs one exponent per unit-group generator");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (exps_[i] < 0 || exps_[i] >= gens[i].order)
      throw DomainError("character exponent out of range");
    order_ = lcm(order_, gens[i].order / gcd(gens[i].order, exps_[i]));
  }
  // chi(g_i) = zeta_order^(step_i)
  std::vector<std::int64_t> step(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::int64_t g = gcd(gens[i].order, exps_[i]);
    step[i] = exps_[i] == 0 ? 0 : (exps_[i] / g) * (order_ / (gens[i].order / g));
  }
  const std::int64_t q = basis_.modulus();
  auto table = std::make_shared<std::vector<std::int64_t>>(q, -1);
  for (std::int64_t n = 0; n < q; ++n) {
    if (!basis_.is_unit(n)) continue;
    auto lg = basis_.log(n);
    std::int64_t k = 0;
    for (std::size_t i = 0; i < lg.size(); ++i) k = (k + lg[i] * step[i]) % order_;
    (*table)[n] = k;
  }
  table_ = std::move(table);
}

std::int64_t DirichletCharacter::value_exponent(std::int64_t n) const {
  return (*table_)[mod(n, modulus())];
}

Cyclotomic DirichletCharacter::value(std::int64_t n) const {
  const std::int64_t k = value_exponent(n);
  if (k < 0) return Cyclotomic::zero(order_);
  return Cyclotomic::root_of_unity(order_, k);
}

int DirichletCharacter::parity() const { return value_exponent(-1) == 0 ? 1 : -1; }

std::int64_t DirichletCharacter::conductor() const {
  const std::int64_t q = modulus();
  for (std::int64_t f : divisors(q)) {
    bool trivial = true;
    for (std::int64_t n = 1 % f; n < q && trivial; n += f) {
      const std::int64_t k = value_exponent(n);
      if (k > 0) trivial = false;
    }
    if (trivial) return f;
  }
  return q;
}

DirichletCharacter DirichletCharacter::conj() const { return pow(-1); }

DirichletCharacter DirichletCharacter::pow(std::int64_t t) const {
  std::vector<std::int64_t> e(exps_.size());
  const auto& gens = basis_.generators();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = mod(exps_[i] * mod(t, gens[i].order), gens[i].order);
  return DirichletCharacter(basis_, std::move(e));
}

std::string DirichletCharacter::label() const {
  std::ostringstream os;
  os << modulus() << ":[";
  for (std::size_t i = 0; i < exps_.size(); ++i) os << (i ? "," : "") << exps_[i];
  os << "]";
  return os.str();
}

DirichletCharacter DirichletCharacter::parse(std::string_view label) {
  std::string s;
  for (char c : label)
    if (c != ' ') s.push_back(c);
  const auto colon = s.find(':');
  if (colon == std::string::npos || s.size() < colon + 3 || s[colon + 1] != '[' || s.back() != ']')
    throw ParseError("malformed character label '" + std::string(label) + "', expected q:[a1,...]");
  std::int64_t q;
  std::vector<std::int64_t> exps;
  try {
    std::size_t used = 0;
    q = std::stoll(s.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("trailing");
    std::string body = s.substr(colon + 2, s.size() - colon - 3);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t comma = body.find(',', pos);
      if (comma == std::string::npos) comma = body.size();
      std::string item = body.substr(pos, comma - pos);
      exps.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing");
      pos = comma + 1;
      if (comma + 1 == body.size()) throw std::invalid_argument("trailing comma");
    }
  } catch (const std::logic_error&) {
    throw ParseError("malformed character label '" + std::string(label) + "'");
  }
  if (q < 1) throw ParseError("character modulus must be positive");
  try {
    return DirichletCharacter(unit_group_generators(q), std::move(exps));
  } catch (const DomainError& e) {
    throw ParseError("character label '" + std::string(label) + "': " + e.what());
  }
}

std::vector<DirichletCharacter> enumerate_characters(std::int64_t q, bool primitive_only) {
  const UnitGroupBasis basis = unit_group_generators(q);
  const auto& gens = basis.generators();
  std::vector<DirichletCharacter> out;
  std::vector<std::int64_t> tuple(gens.size(), 0);
  while (true) {
    DirichletCharacter chi(basis, tuple);
    if (!primitive_only || chi.is_primitive()) out.push_back(std::move(chi));
    std::size_t i = gens.size();
    bool done = true;
    while (i-- > 0) {
      if (++tuple[i] < gens[i].order) {
        done = false;
        break;
      }
      tuple[i] = 0;
    }
    if (done) break;
  }
  return out;
}

Cyclotomic char_value(const DirichletCharacter& chi, std::int64_t n) { return chi.value(n); }

std::int64_t conductor(const DirichletCharacter& chi) { return chi.conductor(); }

DirichletCharacter char_mul(const DirichletCharacter& a, const DirichletCharacter& b,
                            std::int64_t target_modulus) {
  if (target_modulus < 1 || target_modulus % a.modulus() != 0 || target_modulus % b.modulus() != 0)
    throw DomainError("char_mul: factor moduli must divide the target modulus");
  UnitGroupBasis basis = unit_group_generators(target_modulus);
  const std::int64_t l = lcm(a.order(), b.order());
  std::vector<std::int64_t> exps;
  for (const auto& g : basis.generators()) {
    const std::int64_t ka = a.value_exponent(g.residue), kb = b.value_exponent(g.residue);
    if (ka < 0 || kb < 0) throw InternalError("char_mul: generator is not a unit for a factor");
    const std::int64_t num = (ka * (l / a.order()) + kb * (l / b.order())) % l;
    if (num * g.order % l != 0) throw InternalError("char_mul: product value has wrong order");
    exps.push_back(mod(num * g.order / l, g.order));
  }
  return DirichletCharacter(std::move(basis), std::move(exps));
}

DirichletCharacter char_galois(const DirichletCharacter& chi, std::int64_t t) {
  if (gcd(mod(t, chi.order()), chi.order()) != 1 && chi.order() != 1)
    throw DomainError("char_galois: t must be coprime to the character order");
  return chi.pow(t);
}

Cyclotomic gauss_sum(const DirichletCharacter& chi) {
  const std::int64_t q = chi.modulus();
  const std::int64_t l = lcm(q, chi.order());
  std::vector<Rational> w(l);
  for (std::int64_t a = 0; a < q; ++a) {
    const std::int64_t k = chi.value_exponent(a);
    if (k < 0) continue;
    w[mod(k * (l / chi.order()) + a * (l / q), l)] += Rational(1);
  }
  return Cyclotomic::from_exponent_weights(l, w);
}

} // namespace dks
