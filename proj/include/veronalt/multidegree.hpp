#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace veronalt {

// Occurrence counts of each generator. The vector length is the ambient rank.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::size_t rank) : counts_(rank, 0) {}
  MultiDegree(std::initializer_list<std::uint32_t> counts) : counts_(counts) { recount(); }
  explicit MultiDegree(std::vector<std::uint32_t> counts) : counts_(std::move(counts)) { recount(); }

  static MultiDegree unit(std::size_t rank, std::size_t generator);

  std::size_t rank() const { return counts_.size(); }
  std::size_t total() const { return total_; }
  std::uint32_t operator[](std::size_t i) const { return counts_[i]; }
  const std::vector<std::uint32_t>& counts() const { return counts_; }

  void add(std::size_t generator, std::uint32_t by = 1) {
    counts_[generator] += by;
    total_ += by;
  }

  // Componentwise order.
  bool divides(const MultiDegree& other) const;

  friend MultiDegree operator+(const MultiDegree& a, const MultiDegree& b);
  friend MultiDegree operator-(const MultiDegree& a, const MultiDegree& b);
  friend bool operator==(const MultiDegree& a, const MultiDegree& b) { return a.counts_ == b.counts_; }
  // Total degree first, then lexicographic on counts; used for map keys and output order.
  friend std::strong_ordering operator<=>(const MultiDegree& a, const MultiDegree& b);

  std::string to_string() const;

 private:
  void recount();

  std::vector<std::uint32_t> counts_;
  std::size_t total_ = 0;
};

// All multidegrees of the given rank and total, in ascending order.
std::vector<MultiDegree> multidegrees_of_total(std::size_t rank, std::size_t total);

// All nonzero a with a <= m componentwise, sorted by total degree then lexicographically.
std::vector<MultiDegree> sub_multidegrees(const MultiDegree& m);

std::uint64_t multinomial(const MultiDegree& m);
std::uint64_t catalan(std::size_t n);

}  // namespace veronalt
