#include "veronalt/split_backend.hpp"

#include <algorithm>
#include <random>

#include "veronalt/error.hpp"
#include "veronalt/sparse.hpp"

namespace veronalt {
namespace {

using Zorn = std::array<long, 8>;

Zorn zorn_product(const Zorn& x, const Zorn& y) {
  const long a = x[0], b = x[7], a2 = y[0], b2 = y[7];
  const long u[3] = {x[1], x[2], x[3]}, v[3] = {x[4], x[5], x[6]};
  const long u2[3] = {y[1], y[2], y[3]}, v2[3] = {y[4], y[5], y[6]};
  auto cross = [](const long* p, const long* q, int i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    return p[j] * q[k] - p[k] * q[j];
  };
  Zorn z{};
  z[0] = a * a2 + u[0] * v2[0] + u[1] * v2[1] + u[2] * v2[2];
  z[7] = b * b2 + v[0] * u2[0] + v[1] * u2[1] + v[2] * u2[2];
  for (int i = 0; i < 3; ++i) {
    z[1 + i] = a * u2[i] + b2 * u[i] - cross(v, v2, i);
    z[4 + i] = a2 * v[i] + b * v2[i] + cross(u, u2, i);
  }
  return z;
}

// Arithmetic modulo the Mersenne prime 2^61 - 1.
struct ModP {
  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
  std::uint64_t v = 0;

  ModP() = default;
  ModP(long x) {  // NOLINT(google-explicit-constructor)
    const long r = x % static_cast<long>(kPrime);
    v = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(kPrime) : r);
  }
  static ModP raw(std::uint64_t x) {
    ModP m;
    m.v = x % kPrime;
    return m;
  }
  friend ModP operator+(ModP a, ModP b) { return raw(a.v + b.v); }
  friend ModP operator-(ModP a, ModP b) { return raw(a.v + kPrime - b.v); }
  friend ModP operator*(ModP a, ModP b) {
    return raw(static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.v) * b.v) % kPrime));
  }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  friend bool operator==(ModP a, ModP b) { return a.v == b.v; }
  ModP inverse() const {
    ModP result(1), base = *this;
    for (std::uint64_t e = kPrime - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base;
      base = base * base;
    }
    return result;
  }
};

using ModOctonion = BasicOctonion<ModP>;

std::size_t dense_rank(std::vector<std::vector<ModP>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c].v == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    const ModP inv = a[rank][c].inverse();
    for (std::size_t k = c; k < cols; ++k) a[rank][k] = a[rank][k] * inv;
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      const ModP f = a[r][c];
      if (f.v == 0) continue;
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

void check_split_rank(std::size_t rank) {
  if (rank > SplitBackend::kMaxRank) throw Error("split representation valid only for rank <= 3");
}

}  // namespace

const std::vector<StructureConstant>& zorn_structure_constants() {
  static const std::vector<StructureConstant> table = [] {
    std::vector<StructureConstant> t;
    for (std::uint8_t i = 0; i < 8; ++i) {
      for (std::uint8_t j = 0; j < 8; ++j) {
        Zorn x{}, y{};
        x[i] = 1;
        y[j] = 1;
        const Zorn z = zorn_product(x, y);
        for (std::uint8_t k = 0; k < 8; ++k)
          if (z[k] != 0) t.push_back({i, j, k, static_cast<std::int8_t>(z[k])});
      }
    }
    return t;
  }();
  return table;
}

Octonion generic_octonion(std::size_t g) {
  Octonion o;
  for (std::size_t i = 0; i < 8; ++i) o[i] = Poly::variable(8 * g + i);
  return o;
}

SplitBackend::SplitBackend() {
  for (std::size_t g = 0; g < kMaxRank; ++g) generic_.push_back(generic_octonion(g));
}

std::map<std::vector<std::uint8_t>, Rational> forget_brackets(const FreePoly& p) {
  std::map<std::vector<std::uint8_t>, Rational> out;
  for (const auto& [t, c] : p.terms()) {
    auto& slot = out[t.word()];
    slot += c;
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

SplitRep SplitBackend::eval(const FreePoly& p) {
  check_split_rank(p.required_rank());
  return {forget_brackets(p), eval_octonion(p)};
}

Octonion SplitBackend::eval_octonion(const FreePoly& p) {
  check_split_rank(p.required_rank());
  if (p.is_zero()) return {};
  const Rational lead = p.terms().begin()->second;
  FreePoly monic = p;
  monic *= 1 / lead;
  Octonion v = eval_normalized(monic);
  return lead == 1 ? v : scale(lead, std::move(v));
}

Octonion SplitBackend::eval_normalized(const FreePoly& p) {
  const std::string key = format(p);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // Factor the product terms through whichever side has fewer distinct factors:
  // sum c (L*R) = sum_R (sum_L c L) * R  or  sum_L L * (sum_R c R).
  Octonion result;
  std::map<Monomial, FreePoly> by_right, by_left;
  for (const auto& [t, c] : p.terms()) {
    if (t.is_leaf()) {
      result += scale(c, generic_[t.generator()]);
      continue;
    }
    auto [l, r] = t.split();
    by_right[r].add_term(l, c);
    by_left[l].add_term(r, c);
  }
  if (!by_right.empty()) {
    if (by_right.size() <= by_left.size()) {
      for (const auto& [r, left] : by_right)
        result += eval_octonion(left) * eval_octonion(FreePoly::monomial(r));
    } else {
      for (const auto& [l, right] : by_left)
        result += eval_octonion(FreePoly::monomial(l)) * eval_octonion(right);
    }
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

Octonion even_odd_center_identity(const Octonion& z0, const Octonion& z1) {
  const Octonion z = z0 + z1;
  return z * z - scale(Rational(2), z0 * z) - (z1 * z1 - z0 * z0);
}

std::size_t split_rank_modular(const MultiDegree& m, std::uint64_t seed, std::size_t stable_rounds) {
  check_split_rank(m.rank());
  const auto monomials = enumerate_monomials(m);
  std::map<std::vector<std::uint8_t>, std::size_t> word_col;
  for (const auto& t : monomials) word_col.emplace(t.word(), 0);
  std::size_t next = 0;
  for (auto& [w, col] : word_col) col = next++;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coord(0, ModP::kPrime - 1);
  std::vector<std::vector<ModP>> rows(monomials.size(), std::vector<ModP>(word_col.size()));
  for (std::size_t i = 0; i < monomials.size(); ++i) rows[i][word_col.at(monomials[i].word())] = ModP(1);

  auto add_point = [&] {
    std::array<ModOctonion, 3> point;
    for (auto& o : point)
      for (std::size_t k = 0; k < 8; ++k) o[k] = ModP::raw(coord(rng));
    std::unordered_map<Monomial, ModOctonion, MonomialHash> memo;
    auto value = [&](auto&& self, const Monomial& t) -> ModOctonion {
      if (t.is_leaf()) return point[t.generator()];
      if (auto it = memo.find(t); it != memo.end()) return it->second;
      auto [l, r] = t.split();
      ModOctonion v = self(self, l) * self(self, r);
      memo.emplace(t, v);
      return v;
    };
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      const ModOctonion v = value(value, monomials[i]);
      for (std::size_t k = 0; k < 8; ++k) rows[i].push_back(v[k]);
    }
  };

  for (std::size_t k = 0; k < monomials.size() / 8 + 1; ++k) add_point();
  std::size_t rank = dense_rank(rows);
  for (std::size_t stable = 0; stable < stable_rounds && rank < monomials.size();) {
    add_point();
    add_point();
    const std::size_t r = dense_rank(rows);
    stable = r == rank ? stable + 1 : 0;
    rank = r;
  }
  return rank;
}

std::size_t split_rank_exact(const MultiDegree& m) {
  check_split_rank(m.rank());
  SplitBackend backend;
  const auto monomials = enumerate_monomials(m);
  std::map<std::vector<std::uint8_t>, std::uint32_t> word_col;
  std::map<std::pair<std::size_t, Poly::Exponent>, std::uint32_t> poly_col;
  std::vector<SparseVec> rows;
  for (const auto& t : monomials) {
    const SplitRep rep = backend.eval(FreePoly::monomial(t));
    std::vector<std::pair<std::uint32_t, Rational>> entries;
    for (const auto& [w, c] : rep.assoc_part) {
      auto [it, fresh] = word_col.emplace(w, static_cast<std::uint32_t>(word_col.size()));
      entries.emplace_back(it->second, c);
    }
    for (std::size_t k = 0; k < 8; ++k)
      for (const auto& [e, c] : rep.oct_part[k].terms()) {
        auto [it, fresh] = poly_col.emplace(std::make_pair(k, e), static_cast<std::uint32_t>(poly_col.size()));
        entries.emplace_back(it->second + (1u << 30), c);
      }
    rows.push_back(collect(std::move(entries)));
  }
  // Word columns first, then polynomial columns packed right after them.
  const auto words = static_cast<std::uint32_t>(word_col.size());
  for (auto& row : rows)
    for (auto& [c, x] : row)
      if (c >= (1u << 30)) c = c - (1u << 30) + words;
  return rank_of(rows, words + poly_col.size());
}

}  // namespace veronalt
