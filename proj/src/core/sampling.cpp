#include "sampling.hpp"

#include <algorithm>
#include <cstdlib>

#include "arith.hpp"

namespace dks {

namespace {

std::int64_t max_entry(const SL2Matrix& m) {
  return std::max({std::llabs(m.a()), std::llabs(m.b()), std::llabs(m.c()), std::llabs(m.d())});
}

} // namespace

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // rejection keeps the draw unbiased
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

SL2Matrix random_gamma0(std::int64_t level, Rng& rng, std::int64_t bound) {
  if (bound <= 0) bound = std::max<std::int64_t>(6 * level, 40);
  const BetaReps betas(level);
  const auto& units = betas.units();
  while (true) {
    SL2Matrix m;
    const auto letters = rng.uniform(1, 4);
    for (std::int64_t i = 0; i < letters; ++i) {
      switch (rng.uniform(0, 4)) {
        case 0:
        case 1: {
          std::int64_t e = rng.uniform(1, 3) * (rng.uniform(0, 1) ? 1 : -1);
          m = m * SL2Matrix::T(e);
          break;
        }
        case 2:
        case 3: {
          std::int64_t e = rng.uniform(1, 2) * (rng.uniform(0, 1) ? 1 : -1);
          m = m * SL2Matrix(1, 0, level * e, 1);
          break;
        }
        default:
          m = -m;
      }
    }
    const SL2Matrix& beta = betas[units[rng.uniform(0, static_cast<std::int64_t>(units.size()) - 1)]];
    m = rng.uniform(0, 1) ? beta * m : m * beta;
    if (max_entry(m) <= bound) return m;
  }
}

SL2Matrix random_gamma1(std::int64_t level, Rng& rng, std::int64_t bound) {
  if (bound <= 0) bound = std::max<std::int64_t>(6 * level, 40);
  const BetaReps betas(level);
  // Rejection on the product keeps entries in range; the bound loosens if
  // draws keep failing.
  for (int attempt = 1;; ++attempt) {
    const SL2Matrix g = random_gamma0(level, rng, bound);
    const SL2Matrix m = g * betas[g.d()].inverse();
    if (max_entry(m) <= bound) return m;
    if (attempt % 64 == 0) bound *= 2;
  }
}

std::vector<SL2Matrix> sample_gamma0(std::int64_t level, std::size_t count, Rng& rng) {
  std::vector<SL2Matrix> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_gamma0(level, rng));
  return out;
}

std::vector<SL2Matrix> sample_gamma1(std::int64_t level, std::size_t count, Rng& rng) {
  std::vector<SL2Matrix> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_gamma1(level, rng));
  return out;
}

} // namespace dks
