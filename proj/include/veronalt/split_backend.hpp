#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "veronalt/free_poly.hpp"
#include "veronalt/multidegree.hpp"
#include "veronalt/octonion.hpp"

namespace veronalt {

// Image of a rank <= 3 element in Ass[x,y,z] (+) O[X,Y,Z], where X, Y, Z are
// generic split octonions with 8 independent indeterminate coordinates each.
struct SplitRep {
  std::map<std::vector<std::uint8_t>, Rational> assoc_part;  // word -> coefficient
  Octonion oct_part;
  bool is_zero() const { return assoc_part.empty() && oct_part.is_zero(); }
};

class SplitBackend {
 public:
  static constexpr std::size_t kMaxRank = 3;

  SplitBackend();

  const Octonion& generic(std::size_t g) const { return generic_[g]; }

  // Throws Error("split representation valid only for rank <= 3") on larger rank.
  SplitRep eval(const FreePoly& p);
  Octonion eval_octonion(const FreePoly& p);
  bool is_zero(const FreePoly& p) { return eval(p).is_zero(); }

 private:
  Octonion eval_normalized(const FreePoly& p);
  std::unordered_map<std::string, Octonion> memo_;
  std::vector<Octonion> generic_;
};

std::map<std::vector<std::uint8_t>, Rational> forget_brackets(const FreePoly& p);

// (z0+z1)^2 - 2 z0 (z0+z1) - (z1^2 - z0^2); zero whenever z0 and z1 are central.
Octonion even_odd_center_identity(const Octonion& z0, const Octonion& z1);

// Rank of the split evaluation on all monomials of multidegree m (rank <= 3),
// computed from the associative words and from octonion values at random
// points modulo the prime 2^61-1. A nonzero minor there is a nonzero minor of
// the exact evaluation matrix, so the result never exceeds the exact rank.
// Points are added until `stable_rounds` extra batches leave the rank unchanged.
std::size_t split_rank_modular(const MultiDegree& m, std::uint64_t seed, std::size_t stable_rounds = 2);

// Exact rank from the full symbolic evaluation; only practical for small total degree.
std::size_t split_rank_exact(const MultiDegree& m);

}  // namespace veronalt
