#include "veronalt/monomial.hpp"

#include <algorithm>
#include <array>

#include "veronalt/error.hpp"

namespace veronalt {
namespace {

std::size_t subtree_end(std::span<const std::uint8_t> code, std::size_t pos) {
  std::size_t need = 1;
  while (need > 0) {
    if (code[pos++] == Monomial::kBranch)
      ++need;
    else
      --need;
  }
  return pos;
}

struct ShapeInfo {
  std::size_t leaves;
  std::uint64_t rank;
};

ShapeInfo shape_of(std::span<const std::uint8_t> code) {
  if (code.front() != Monomial::kBranch) return {1, 0};
  const std::size_t mid = subtree_end(code, 1);
  auto l = shape_of(code.subspan(1, mid - 1));
  auto r = shape_of(code.subspan(mid));
  const std::size_t n = l.leaves + r.leaves;
  return {n, compose_shape_rank(n, l.leaves, l.rank, r.rank)};
}

void unrank_into(std::uint64_t rank, std::span<const std::uint8_t> word, std::vector<std::uint8_t>& code) {
  const std::size_t n = word.size();
  if (n == 1) {
    code.push_back(word.front());
    return;
  }
  std::size_t k = 1;
  for (;; ++k) {
    const std::uint64_t block = shape_count(k) * shape_count(n - k);
    if (rank < block) break;
    rank -= block;
  }
  const std::uint64_t right_count = shape_count(n - k);
  code.push_back(Monomial::kBranch);
  unrank_into(rank / right_count, word.first(k), code);
  unrank_into(rank % right_count, word.subspan(k), code);
}

}  // namespace

std::uint64_t shape_count(std::size_t leaves) { return leaves == 0 ? 0 : catalan(leaves - 1); }

std::uint64_t compose_shape_rank(std::size_t leaves, std::size_t left_leaves, std::uint64_t left_rank,
                                 std::uint64_t right_rank) {
  std::uint64_t offset = 0;
  for (std::size_t j = 1; j < left_leaves; ++j) offset += shape_count(j) * shape_count(leaves - j);
  return offset + left_rank * shape_count(leaves - left_leaves) + right_rank;
}

Monomial Monomial::leaf(std::size_t generator) {
  if (generator >= kMaxGenerators) throw Error("generator index out of range");
  return Monomial({static_cast<std::uint8_t>(generator)}, 1, 0);
}

Monomial Monomial::product(const Monomial& left, const Monomial& right) {
  std::vector<std::uint8_t> code;
  code.reserve(1 + left.code_.size() + right.code_.size());
  code.push_back(kBranch);
  code.insert(code.end(), left.code_.begin(), left.code_.end());
  code.insert(code.end(), right.code_.begin(), right.code_.end());
  const std::size_t n = left.degree_ + right.degree_;
  return Monomial(std::move(code), n, compose_shape_rank(n, left.degree_, left.shape_rank_, right.shape_rank_));
}

Monomial Monomial::from_shape(std::uint64_t shape_rank, std::span<const std::uint8_t> word) {
  if (word.empty()) throw Error("empty multidegree");
  if (shape_rank >= shape_count(word.size())) throw Error("shape rank out of range");
  std::vector<std::uint8_t> code;
  code.reserve(2 * word.size() - 1);
  unrank_into(shape_rank, word, code);
  return Monomial(std::move(code), word.size(), shape_rank);
}

Monomial Monomial::from_code(std::span<const std::uint8_t> code) {
  auto info = shape_of(code);
  return Monomial(std::vector<std::uint8_t>(code.begin(), code.end()), info.leaves, info.rank);
}

std::pair<Monomial, Monomial> Monomial::split() const {
  if (is_leaf()) throw Error("a generator has no factors");
  const std::span<const std::uint8_t> c = code_;
  const std::size_t mid = subtree_end(c, 1);
  return {from_code(c.subspan(1, mid - 1)), from_code(c.subspan(mid))};
}

Monomial Monomial::left() const { return split().first; }
Monomial Monomial::right() const { return split().second; }

std::vector<std::uint8_t> Monomial::word() const {
  std::vector<std::uint8_t> w;
  w.reserve(degree_);
  for (auto c : code_)
    if (c != kBranch) w.push_back(c);
  return w;
}

MultiDegree Monomial::multidegree(std::size_t rank) const {
  MultiDegree m(rank);
  for (auto c : code_) {
    if (c == kBranch) continue;
    if (c >= rank) throw Error("generator index exceeds rank");
    m.add(c);
  }
  return m;
}

std::size_t Monomial::max_generator() const {
  std::size_t g = 0;
  for (auto c : code_)
    if (c != kBranch) g = std::max<std::size_t>(g, c);
  return g;
}

Monomial Monomial::relabeled(std::span<const std::uint8_t> relabel) const {
  auto code = code_;
  for (auto& c : code)
    if (c != kBranch) c = relabel[c];
  return Monomial(std::move(code), degree_, shape_rank_);
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  if (auto c = a.shape_rank_ <=> b.shape_rank_; c != 0) return c;
  // Same shape: branch markers coincide, so the code order is the word order.
  return std::lexicographical_compare_three_way(a.code_.begin(), a.code_.end(), b.code_.begin(),
                                                b.code_.end());
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto c : code_) h = (h ^ c) * 1099511628211ull;
  return h;
}

std::vector<Monomial> enumerate_monomials(const MultiDegree& m) {
  if (m.total() == 0) throw Error("empty multidegree");
  std::vector<std::uint8_t> word;
  for (std::size_t g = 0; g < m.rank(); ++g) word.insert(word.end(), m[g], static_cast<std::uint8_t>(g));
  std::vector<std::vector<std::uint8_t>> words;
  do {
    words.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));

  std::vector<Monomial> out;
  const std::uint64_t shapes = shape_count(m.total());
  out.reserve(shapes * words.size());
  for (std::uint64_t s = 0; s < shapes; ++s)
    for (const auto& w : words) out.push_back(Monomial::from_shape(s, w));
  return out;
}

namespace {
void format_into(std::span<const std::uint8_t> code, std::span<const std::string> names, std::string& out) {
  if (code.front() != Monomial::kBranch) {
    out += names[code.front()];
    return;
  }
  const std::size_t mid = subtree_end(code, 1);
  format_into(code.subspan(1, mid - 1), names, out);
  out += '*';
  auto right = code.subspan(mid);
  const bool bracket = right.front() == Monomial::kBranch;
  if (bracket) out += '(';
  format_into(right, names, out);
  if (bracket) out += ')';
}
}  // namespace

std::string format_monomial(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  format_into(m.code(), names, out);
  return out;
}

}  // namespace veronalt
