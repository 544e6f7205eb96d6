#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "veronalt/multidegree.hpp"

namespace veronalt {

// A fully bracketed word: a binary tree whose leaves are generator indices.
//
// Stored as its preorder code, with kBranch marking internal nodes. The
// canonical order compares degree, then tree shape by Catalan rank, then the
// leaf word lexicographically. Catalan rank orders trees of n leaves by the
// size of the left subtree (ascending), then the left subtree's rank, then
// the right subtree's rank, so right-normed words come first and left-normed
// words last.
class Monomial {
 public:
  static constexpr std::uint8_t kBranch = 0xFF;
  static constexpr std::size_t kMaxGenerators = 255;

  static Monomial leaf(std::size_t generator);
  static Monomial product(const Monomial& left, const Monomial& right);
  // Shape of rank `shape_rank` among trees with word.size() leaves, filled with `word`.
  static Monomial from_shape(std::uint64_t shape_rank, std::span<const std::uint8_t> word);

  bool is_leaf() const { return code_.size() == 1; }
  std::size_t degree() const { return degree_; }
  std::size_t generator() const { return code_.front(); }
  std::uint64_t shape_rank() const { return shape_rank_; }
  std::span<const std::uint8_t> code() const { return code_; }

  Monomial left() const;
  Monomial right() const;
  std::pair<Monomial, Monomial> split() const;

  std::vector<std::uint8_t> word() const;
  MultiDegree multidegree(std::size_t rank) const;
  std::size_t max_generator() const;

  // Replace each leaf g by relabel[g].
  Monomial relabeled(std::span<const std::uint8_t> relabel) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  Monomial(std::vector<std::uint8_t> code, std::size_t degree, std::uint64_t shape_rank)
      : code_(std::move(code)), degree_(degree), shape_rank_(shape_rank) {}
  static Monomial from_code(std::span<const std::uint8_t> code);

  std::vector<std::uint8_t> code_;
  std::size_t degree_ = 0;
  std::uint64_t shape_rank_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Number of binary tree shapes with n leaves (Catalan(n-1)).
std::uint64_t shape_count(std::size_t leaves);
// Rank of the shape with `leaves` leaves whose left subtree has `left_leaves` leaves
// and whose subtrees have the given ranks.
std::uint64_t compose_shape_rank(std::size_t leaves, std::size_t left_leaves, std::uint64_t left_rank,
                                 std::uint64_t right_rank);

// Every monomial of multidegree m in canonical order.
// Count: Catalan(total-1) * multinomial(m). Throws Error("empty multidegree") if total is 0.
std::vector<Monomial> enumerate_monomials(const MultiDegree& m);

// Text form with the given generator names, e.g. "x*(y*z)". `*` associates to the left.
std::string format_monomial(const Monomial& m, std::span<const std::string> names);

}  // namespace veronalt

template <>
struct std::hash<veronalt::Monomial> {
  std::size_t operator()(const veronalt::Monomial& m) const { return m.hash(); }
};
