#include "modgroup.hpp"

#include <deque>
#include <sstream>
#include <tuple>

#include "arith.hpp"
#include "errors.hpp"

namespace dks {

std::int64_t Mat2::det() const { return add_checked(mul_checked(a, d), -mul_checked(b, c)); }

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {add_checked(mul_checked(x.a, y.a), mul_checked(x.b, y.c)),
          add_checked(mul_checked(x.a, y.b), mul_checked(x.b, y.d)),
          add_checked(mul_checked(x.c, y.a), mul_checked(x.d, y.c)),
          add_checked(mul_checked(x.c, y.b), mul_checked(x.d, y.d))};
}

SL2Matrix::SL2Matrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
  : m_{a, b, c, d} {
  if (m_.det() != 1) throw DomainError("matrix " + str() + " does not have determinant 1");
}

SL2Matrix SL2Matrix::inverse() const { return {m_.d, -m_.b, -m_.c, m_.a}; }

SL2Matrix SL2Matrix::operator-() const { return {-m_.a, -m_.b, -m_.c, -m_.d}; }

SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) {
  Mat2 p = x.m_ * y.m_;
  SL2Matrix r;
  r.m_ = p;
  return r;
}

bool operator<(const SL2Matrix& x, const SL2Matrix& y) {
  const auto& p = x.m_;
  const auto& q = y.m_;
  return std::tie(p.a, p.b, p.c, p.d) < std::tie(q.a, q.b, q.c, q.d);
}

std::string SL2Matrix::str() const {
  std::ostringstream os;
  os << "[[" << m_.a << "," << m_.b << "],[" << m_.c << "," << m_.d << "]]";
  return os.str();
}

Membership classify(std::int64_t level, const Mat2& m) {
  if (level < 1) throw DomainError("level must be positive");
  if (m.det() != 1) throw DomainError("classify: determinant is not 1");
  Membership r;
  r.sl2 = true;
  r.gamma0 = mod(m.c, level) == 0;
  r.gamma1 = r.gamma0 && mod(m.a - 1, level) == 0 && mod(m.d - 1, level) == 0;
  return r;
}

bool in_gamma0(std::int64_t level, const SL2Matrix& m) { return mod(m.c(), level) == 0; }

bool in_gamma1(std::int64_t level, const SL2Matrix& m) {
  return mod(m.c(), level) == 0 && mod(m.a() - 1, level) == 0 && mod(m.d() - 1, level) == 0;
}

std::int64_t gamma1_index(std::int64_t level) {
  std::int64_t r = level * level;
  for (const auto& f : factorize(level)) r = r / (f.p * f.p) * (f.p * f.p - 1);
  return r;
}

std::vector<Letter> st_word(const SL2Matrix& m) {
  std::vector<Letter> word;
  Mat2 cur = m.mat();
  const Mat2 s_inv{0, 1, -1, 0};
  while (cur.c != 0) {
    const std::int64_t q = floor_div(cur.a, cur.c);
    if (q != 0) {
      word.push_back({Letter::Gen::T, q});
      cur = Mat2{1, -q, 0, 1} * cur;
    }
    word.push_back({Letter::Gen::S, 1});
    cur = s_inv * cur;
  }
  // cur = +-T^b
  if (cur.a == -1) {
    word.push_back({Letter::Gen::S, 2});
    cur = Mat2{-1, 0, 0, -1} * cur;
  }
  if (cur.b != 0) word.push_back({Letter::Gen::T, cur.b});
  return word;
}

SL2Matrix evaluate_word(const std::vector<Letter>& word) {
  SL2Matrix r;
  for (const auto& l : word) {
    if (l.gen == Letter::Gen::T) {
      r = r * SL2Matrix::T(l.power);
    } else {
      for (std::int64_t i = 0; i < mod(l.power, 4); ++i) r = r * SL2Matrix::S();
    }
  }
  return r;
}

CosetTable::CosetTable(std::int64_t level) : level_(level) {
  if (level < 1) throw DomainError("coset table level must be positive");
  index_of_label_.assign(level * level, -1);
  const SL2Matrix S = SL2Matrix::S(), T = SL2Matrix::T();

  reps_.push_back(SL2Matrix::identity());
  index_of_label_[label(reps_[0])] = 0;
  std::deque<std::size_t> queue{0};
  std::vector<std::size_t> s_img, t_img;
  auto visit = [&](std::size_t from, const SL2Matrix& x) {
    SL2Matrix m = reps_[from] * x;
    std::int64_t& slot = index_of_label_[label(m)];
    if (slot < 0) {
      slot = static_cast<std::int64_t>(reps_.size());
      reps_.push_back(m);
      queue.push_back(reps_.size() - 1);
    }
    return static_cast<std::size_t>(slot);
  };
  while (!queue.empty()) {
    std::size_t r = queue.front();
    queue.pop_front();
    if (s_img.size() <= r) {
      s_img.resize(r + 1);
      t_img.resize(r + 1);
    }
    s_img[r] = visit(r, S);
    t_img[r] = visit(r, T);
  }
  s_image_ = std::move(s_img);
  t_image_ = std::move(t_img);
  t_preimage_.assign(reps_.size(), 0);
  for (std::size_t r = 0; r < reps_.size(); ++r) t_preimage_[t_image_[r]] = r;

  // every edge must land in the coset it claims
  for (std::size_t r = 0; r < reps_.size(); ++r) {
    if (!in_gamma1(level_, reps_[r] * S * reps_[s_image_[r]].inverse()) ||
        !in_gamma1(level_, reps_[r] * T * reps_[t_image_[r]].inverse()))
      throw InternalError("coset table edge inconsistent with Gamma1 membership");
  }
}

std::int64_t CosetTable::label(const SL2Matrix& m) const {
  return mod(m.c(), level_) * level_ + mod(m.d(), level_);
}

std::size_t CosetTable::coset_of(const SL2Matrix& m) const {
  const std::int64_t idx = index_of_label_[label(m)];
  if (idx < 0) throw InternalError("coset label missing from table");
  if (!in_gamma1(level_, m * reps_[idx].inverse()))
    throw InternalError("coset label disagrees with Gamma1 membership");
  return static_cast<std::size_t>(idx);
}

std::size_t CosetTable::trace(const std::vector<Letter>& word) const {
  std::size_t r = 0;
  for (const auto& l : word) {
    if (l.gen == Letter::Gen::S) {
      for (std::int64_t i = 0; i < mod(l.power, 4); ++i) r = s_image_[r];
    } else {
      for (std::int64_t i = 0; i < mod(l.power, level_); ++i) r = t_image_[r];
    }
  }
  return r;
}

CosetTable coset_table(std::int64_t level) {
  if (level < 3) throw DomainError("coset_table requires level >= 3");
  return CosetTable(level);
}

SchreierGenerators::SchreierGenerators(CosetTable table) : table_(std::move(table)) {
  const std::int64_t level = table_.level();
  const SL2Matrix S = SL2Matrix::S(), T = SL2Matrix::T();
  std::map<SL2Matrix, std::size_t> seen;
  auto edge = [&](std::size_t r, const SL2Matrix& x, std::size_t img) -> long {
    SL2Matrix g = table_.rep(r) * x * table_.rep(img).inverse();
    ++raw_count_;
    if (!in_gamma1(level, g)) throw InternalError("Schreier generator outside Gamma1");
    if (g == SL2Matrix::identity()) return -1;
    auto [it, inserted] = seen.emplace(g, gens_.size());
    if (inserted) gens_.push_back(g);
    return static_cast<long>(it->second);
  };
  s_edge_.resize(table_.size());
  t_edge_.resize(table_.size());
  for (std::size_t r = 0; r < table_.size(); ++r) {
    s_edge_[r] = edge(r, S, table_.s_image(r));
    t_edge_[r] = edge(r, T, table_.t_image(r));
  }
}

std::vector<std::pair<std::size_t, int>> SchreierGenerators::rewrite(const SL2Matrix& m) const {
  if (!in_gamma1(table_.level(), m)) throw DomainError("rewrite: element is not in Gamma1");
  std::vector<std::pair<std::size_t, int>> out;
  std::size_t r = 0;
  auto push = [&](long e, int sign) {
    if (e >= 0) out.emplace_back(static_cast<std::size_t>(e), sign);
  };
  for (const auto& l : st_word(m)) {
    if (l.gen == Letter::Gen::S) {
      for (std::int64_t i = 0; i < mod(l.power, 4); ++i) {
        push(s_edge_[r], +1);
        r = table_.s_image(r);
      }
    } else if (l.power > 0) {
      for (std::int64_t i = 0; i < l.power; ++i) {
        push(t_edge_[r], +1);
        r = table_.t_image(r);
      }
    } else {
      for (std::int64_t i = 0; i < -l.power; ++i) {
        r = table_.t_preimage(r);
        push(t_edge_[r], -1);
      }
    }
  }
  if (r != 0) throw InternalError("rewrite: word did not return to the identity coset");
  return out;
}

std::vector<SL2Matrix> schreier_generators(std::int64_t level) {
  return SchreierGenerators(coset_table(level)).generators();
}

BetaReps::BetaReps(std::int64_t level) : level_(level), units_(units_mod(level)) {
  if (level < 1) throw DomainError("level must be positive");
  by_residue_.resize(level);
  for (std::int64_t j : units_) {
    if (mod(j - 1, level) == 0) {
      by_residue_[j] = SL2Matrix::identity();
      continue;
    }
    const std::int64_t a = mod_inverse(j, level);
    by_residue_[j] = SL2Matrix(a, (a * j - 1) / level, level, j);
  }
}

const SL2Matrix& BetaReps::operator[](std::int64_t j) const {
  const std::int64_t r = mod(j, level_);
  if (gcd(r, level_) != 1) throw DomainError("beta_j requires j to be a unit mod N");
  return by_residue_[r];
}

std::map<std::int64_t, SL2Matrix> gamma0_coset_reps(std::int64_t level) {
  if (level < 3) throw DomainError("gamma0_coset_reps requires level >= 3");
  BetaReps reps(level);
  std::map<std::int64_t, SL2Matrix> out;
  for (std::int64_t j : reps.units()) out.emplace(j, reps[j]);
  return out;
}

std::map<std::int64_t, std::int64_t> coset_permutation(std::int64_t level, const SL2Matrix& gamma) {
  if (!in_gamma0(level, gamma)) throw DomainError("coset_permutation: gamma not in Gamma0(N)");
  std::map<std::int64_t, std::int64_t> sigma;
  const std::int64_t d = mod(gamma.d(), level);
  for (std::int64_t j : units_mod(level)) sigma.emplace(j, mod(j * d, level));
  return sigma;
}

} // namespace dks
