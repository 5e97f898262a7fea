#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "modgroup.hpp"

namespace dks {

/// Seeded generator whose draws are identical on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
  std::mt19937_64 engine_;
};

/// Random element of Gamma0(N): a short word in T, V_N = [[1,0],[N,1]] and -I,
/// multiplied by a random beta_j; all entries bounded by `bound` in absolute value.
SL2Matrix random_gamma0(std::int64_t level, Rng& rng, std::int64_t bound = 0);
/// Random element of Gamma1(N), built as g * beta_{d_g}^-1 from random_gamma0;
/// entries bounded like random_gamma0.
SL2Matrix random_gamma1(std::int64_t level, Rng& rng, std::int64_t bound = 0);

std::vector<SL2Matrix> sample_gamma0(std::int64_t level, std::size_t count, Rng& rng);
std::vector<SL2Matrix> sample_gamma1(std::int64_t level, std::size_t count, Rng& rng);

} // namespace dks
