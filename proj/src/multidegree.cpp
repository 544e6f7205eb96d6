#include "veronalt/multidegree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "veronalt/error.hpp"

namespace veronalt {

MultiDegree MultiDegree::unit(std::size_t rank, std::size_t generator) {
  MultiDegree m(rank);
  m.add(generator);
  return m;
}

void MultiDegree::recount() {
  total_ = std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

bool MultiDegree::divides(const MultiDegree& other) const {
  if (rank() != other.rank()) return false;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] > other.counts_[i]) return false;
  return true;
}

MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
  if (a.rank() != b.rank()) throw Error("multidegree rank mismatch");
  MultiDegree r = a;
  for (std::size_t i = 0; i < b.rank(); ++i) r.counts_[i] += b.counts_[i];
  r.total_ += b.total_;
  return r;
}

MultiDegree operator-(const MultiDegree& a, const MultiDegree& b) {
  if (!b.divides(a)) throw Error("multidegree subtraction underflow");
  MultiDegree r = a;
  for (std::size_t i = 0; i < b.rank(); ++i) r.counts_[i] -= b.counts_[i];
  r.total_ -= b.total_;
  return r;
}

std::strong_ordering operator<=>(const MultiDegree& a, const MultiDegree& b) {
  if (auto c = a.total_ <=> b.total_; c != 0) return c;
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  // Larger leading counts first, so (2,0) < (1,1) < (0,2) like the lex order on words.
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (a.counts_[i] != b.counts_[i]) return b.counts_[i] <=> a.counts_[i];
  return std::strong_ordering::equal;
}

std::string MultiDegree::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < counts_.size(); ++i) out << (i ? "," : "") << counts_[i];
  out << ')';
  return out.str();
}

std::vector<MultiDegree> multidegrees_of_total(std::size_t rank, std::size_t total) {
  std::vector<MultiDegree> out;
  if (rank == 0) return out;
  std::vector<std::uint32_t> c(rank, 0);
  // Compositions of `total` into `rank` nonnegative parts, leading parts descending.
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (i + 1 == rank) {
      c[i] = static_cast<std::uint32_t>(left);
      out.emplace_back(c);
      return;
    }
    for (std::size_t k = left + 1; k-- > 0;) {
      c[i] = static_cast<std::uint32_t>(k);
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, total);
  return out;
}

std::vector<MultiDegree> sub_multidegrees(const MultiDegree& m) {
  std::vector<MultiDegree> out;
  std::vector<std::uint32_t> c(m.rank(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m.rank()) {
      MultiDegree a(c);
      if (a.total() > 0) out.push_back(std::move(a));
      return;
    }
    for (std::uint32_t k = 0; k <= m[i]; ++k) {
      c[i] = k;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t multinomial(const MultiDegree& m) {
  std::uint64_t result = 1;
  std::uint64_t n = 0;
  for (auto k : m.counts()) {
    for (std::uint32_t j = 1; j <= k; ++j) {
      ++n;
      result = result * n / j;
    }
  }
  return result;
}

std::uint64_t catalan(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace veronalt
