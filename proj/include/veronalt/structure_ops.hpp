#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "veronalt/graded.hpp"
#include "veronalt/relatively_free.hpp"

namespace veronalt {

// Degree-truncated nucleus, center, associative nucleus, associator ideal and
// the chain D_0 = A, D_i = ideal generated by (D_{i-1}, A, A).
//
// Truncation: v of degree d counts as nuclear at cutoff D when (v,u,w),
// (u,v,w) and (u,w,v) vanish for all standard monomials u, w with
// d + |u| + |w| <= D. This over-approximates the nucleus and shrinks as D
// grows. The same convention applies to the center and the associative nucleus.
class StructureOps {
 public:
  explicit StructureOps(RelativelyFreeAlgebra& alg) : alg_(alg) {}

  RelativelyFreeAlgebra& algebra() { return alg_; }

  // Slices over every multidegree of total degree d. Require d < D <= cap.
  GradedSubspace nucleus_component(std::size_t d, std::size_t cutoff);
  GradedSubspace center_component(std::size_t d, std::size_t cutoff);
  GradedSubspace assoc_nucleus_component(std::size_t d, std::size_t cutoff);

  const std::vector<SparseVec>& nucleus(const MultiDegree& m, std::size_t cutoff);
  const std::vector<SparseVec>& center(const MultiDegree& m, std::size_t cutoff);
  // Greatest subspace of the truncated nucleus stable under multiplication by
  // standard monomials on either side while the degree stays <= cutoff.
  // Degree `cutoff` itself has no constraints and is the full component.
  const std::vector<SparseVec>& assoc_nucleus(const MultiDegree& m, std::size_t cutoff);

  const std::vector<SparseVec>& associator_ideal(const MultiDegree& m) { return d_chain(1, m); }
  const std::vector<SparseVec>& d_chain(std::size_t i, const MultiDegree& m);
  GradedSubspace associator_ideal_component(const MultiDegree& m);
  GradedSubspace d_chain_component(std::size_t i, const MultiDegree& m);

  // [v, x_g] for v in the truncated nucleus at degree d <= cutoff - 2 must lie
  // in the truncated nucleus of degree d + 1.
  struct ClosureReport {
    std::size_t checked = 0;
    std::vector<std::pair<MultiDegree, std::size_t>> failures;  // (multidegree of v, basis index)
  };
  ClosureReport commutator_closure(std::size_t cutoff);

  // Soft check: v*w and w*v for v in the truncated associative nucleus with
  // margin >= 2 and w a basis vector of the associator ideal, degrees <= cutoff.
  struct ProductReport {
    std::size_t checked = 0;
    std::size_t nonzero = 0;
  };
  ProductReport ud_diagnostic(std::size_t cutoff);

 private:
  void check_truncation(std::size_t d, std::size_t cutoff) const;
  // Every multidegree with total in [lo, hi].
  std::vector<MultiDegree> multidegrees_between(std::size_t lo, std::size_t hi) const;
  SparseVec associator(const MultiDegree& a, const SparseVec& u, const MultiDegree& b, const SparseVec& v,
                       const MultiDegree& c, const SparseVec& w);

  RelativelyFreeAlgebra& alg_;
  std::map<std::pair<MultiDegree, std::size_t>, std::vector<SparseVec>> nucleus_, center_, assoc_nucleus_;
  std::map<std::pair<std::size_t, MultiDegree>, std::vector<SparseVec>> d_chain_;
};

// Returns a residue class holding at least n members, or nothing. Residues
// must lie in 1..n-1 and n >= 2. Any multiset of (n-1)^2 + 1 residues has one.
std::optional<std::size_t> pigeonhole_witness(std::size_t n, const std::vector<std::size_t>& residues);

}  // namespace veronalt
