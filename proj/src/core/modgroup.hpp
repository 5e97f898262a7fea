#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dks {

/// Arbitrary 2x2 integer matrix (used for monoid elements and det checks).
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Element of SL2(Z). Entries row-major: [[a, b], [c, d]].
class SL2Matrix {
public:
  SL2Matrix() = default;
  /// Throws DomainError when ad - bc != 1.
  SL2Matrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  explicit SL2Matrix(const Mat2& m) : SL2Matrix(m.a, m.b, m.c, m.d) {}

  static SL2Matrix identity() { return {}; }
  static SL2Matrix S() { return {0, -1, 1, 0}; }
  static SL2Matrix T(std::int64_t power = 1) { return {1, power, 0, 1}; }

  std::int64_t a() const { return m_.a; }
  std::int64_t b() const { return m_.b; }
  std::int64_t c() const { return m_.c; }
  std::int64_t d() const { return m_.d; }
  const Mat2& mat() const { return m_; }

  SL2Matrix inverse() const;
  SL2Matrix operator-() const;
  friend SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y);
  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;
  friend bool operator<(const SL2Matrix& x, const SL2Matrix& y);

  /// "[[a,b],[c,d]]"
  std::string str() const;

private:
  Mat2 m_;
};

struct Membership {
  bool sl2 = false;
  bool gamma0 = false;
  bool gamma1 = false;
};

/// Throws DomainError when det(m) != 1.
Membership classify(std::int64_t level, const Mat2& m);
bool in_gamma0(std::int64_t level, const SL2Matrix& m);
bool in_gamma1(std::int64_t level, const SL2Matrix& m);

/// [SL2(Z) : Gamma1(N)] = N^2 prod_{p | N} (1 - 1/p^2), N > 2.
std::int64_t gamma1_index(std::int64_t level);

/// S/T word for an SL2 element: m = prod of letters, T letters carry a power.
struct Letter {
  enum class Gen { S, T } gen;
  std::int64_t power;
};
std::vector<Letter> st_word(const SL2Matrix& m);
SL2Matrix evaluate_word(const std::vector<Letter>& word);

/// Right cosets Gamma1(N)\SL2(Z), enumerated breadth-first under right
/// multiplication by S and T from the identity coset.
class CosetTable {
public:
  explicit CosetTable(std::int64_t level);

  std::int64_t level() const { return level_; }
  std::size_t size() const { return reps_.size(); }
  const SL2Matrix& rep(std::size_t coset) const { return reps_[coset]; }
  std::size_t s_image(std::size_t coset) const { return s_image_[coset]; }
  std::size_t t_image(std::size_t coset) const { return t_image_[coset]; }
  std::size_t t_preimage(std::size_t coset) const { return t_preimage_[coset]; }

  /// Coset containing m; cross-checks the label against Gamma1 membership.
  std::size_t coset_of(const SL2Matrix& m) const;
  /// Coset reached by acting with the word on the identity coset.
  std::size_t trace(const std::vector<Letter>& word) const;

private:
  std::int64_t label(const SL2Matrix& m) const;

  std::int64_t level_;
  std::vector<SL2Matrix> reps_;
  std::vector<std::size_t> s_image_, t_image_, t_preimage_;
  std::vector<std::int64_t> index_of_label_;
};

CosetTable coset_table(std::int64_t level);

/// Schreier generators of Gamma1(N) read off a coset table.
class SchreierGenerators {
public:
  explicit SchreierGenerators(CosetTable table);
  explicit SchreierGenerators(std::int64_t level) : SchreierGenerators(CosetTable(level)) {}

  const CosetTable& table() const { return table_; }
  const std::vector<SL2Matrix>& generators() const { return gens_; }
  /// rep(r) * x * rep(r.x)^-1 for every coset r and x in {S, T}, before pruning.
  std::size_t raw_count() const { return raw_count_; }

  /// Rewrites an element of Gamma1(N) as a product of generators; each
  /// factor is (generator index, +1 or -1 for inverse).
  std::vector<std::pair<std::size_t, int>> rewrite(const SL2Matrix& m) const;

private:
  CosetTable table_;
  std::vector<SL2Matrix> gens_;
  std::size_t raw_count_ = 0;
  // generator index per (coset, letter); -1 for the identity
  std::vector<long> s_edge_, t_edge_;
};

std::vector<SL2Matrix> schreier_generators(std::int64_t level);

/// Representatives beta_j of Gamma0(N)/Gamma1(N), bottom-right entry = j.
class BetaReps {
public:
  explicit BetaReps(std::int64_t level);

  std::int64_t level() const { return level_; }
  const std::vector<std::int64_t>& units() const { return units_; }
  /// beta_j for j a unit mod N (any representative of the class).
  const SL2Matrix& operator[](std::int64_t j) const;

private:
  std::int64_t level_;
  std::vector<std::int64_t> units_;
  std::vector<SL2Matrix> by_residue_;
};

std::map<std::int64_t, SL2Matrix> gamma0_coset_reps(std::int64_t level);

/// sigma_gamma(j) = j * d_gamma mod N for gamma in Gamma0(N).
std::map<std::int64_t, std::int64_t> coset_permutation(std::int64_t level, const SL2Matrix& gamma);

} // namespace dks
