#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "veronalt/free_poly.hpp"
#include "veronalt/identity_set.hpp"
#include "veronalt/multidegree.hpp"

namespace veronalt {

// Serial reference construction of T-ideal components, directly in monomial
// coordinates. Slow (every tree monomial is a column) and kept for testing the
// product-space engine in RelativelyFreeAlgebra.
//
// The spanning set of the multidegree-m component is
//   (i)   the full polarizations of the defining identities,
//   (ii)  with every tuple of monomials whose multidegrees sum to m substituted,
//   (iii) together with u*s and s*u for every lower T-ideal element s and every
//         monomial u (of any degree) that brings the product to m.
class ReferenceTIdeal {
 public:
  ReferenceTIdeal(IdentitySet ids, std::size_t rank, std::size_t cap);

  std::vector<FreePoly> spanning_set(const MultiDegree& m);
  // Reduced row echelon basis, pivots on the earliest monomials, ordered by pivot.
  const std::vector<FreePoly>& basis(const MultiDegree& m);
  std::size_t quotient_dim(const MultiDegree& m);

 private:
  IdentitySet ids_;
  std::size_t rank_;
  std::size_t cap_;
  std::map<MultiDegree, std::vector<FreePoly>> basis_;
};

// Spanning set of the multidegree-m component of the T-ideal, by the direct construction.
std::vector<FreePoly> tideal_component(const IdentitySet& ids, std::size_t rank, const MultiDegree& m,
                                       std::size_t cap);

}  // namespace veronalt
