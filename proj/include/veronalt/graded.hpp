#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "veronalt/free_poly.hpp"
#include "veronalt/multidegree.hpp"
#include "veronalt/relatively_free.hpp"
#include "veronalt/sparse.hpp"

namespace veronalt {

// Reduced row echelon basis of span(vectors).
std::vector<SparseVec> reduced_span(const std::vector<SparseVec>& vectors, std::size_t cols);

// Basis of { sum c_k basis[k] : sum c_k images[k] = 0 } in reduced echelon form.
std::vector<SparseVec> restrict_kernel(const std::vector<SparseVec>& basis, const std::vector<SparseVec>& images,
                                       std::size_t image_cols, std::size_t cols);

std::vector<SparseVec> unit_basis(std::size_t dim);

// A subspace of each multihomogeneous component of the relatively free
// algebra, stored as reduced echelon bases on standard-monomial coordinates.
struct GradedSubspace {
  std::size_t cutoff = 0;  // 0 for untruncated computations
  std::map<MultiDegree, std::vector<SparseVec>> basis;

  std::size_t dim() const;
  std::size_t dim(const MultiDegree& m) const;
};

// Coordinates on a whole homogeneous component: the multidegree blocks of
// total `degree`, concatenated in ascending multidegree order. Needed when a
// linear substitution mixes multidegrees.
class DegreeLayout {
 public:
  DegreeLayout(RelativelyFreeAlgebra& alg, std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return dim_; }
  const std::vector<MultiDegree>& blocks() const { return blocks_; }
  std::size_t offset(std::size_t block) const { return offsets_[block]; }
  std::size_t block_dim(std::size_t block) const { return offsets_[block + 1] - offsets_[block]; }
  std::size_t block_of(const MultiDegree& m) const;

  SparseVec embed(const MultiDegree& m, const SparseVec& v) const;
  // Nonzero blocks only.
  std::map<MultiDegree, SparseVec> split(const SparseVec& v) const;

  // p must be homogeneous of this degree.
  SparseVec normal_form(RelativelyFreeAlgebra& alg, const FreePoly& p) const;
  FreePoly to_poly(RelativelyFreeAlgebra& alg, const SparseVec& v) const;

 private:
  std::size_t degree_;
  std::size_t dim_ = 0;
  std::vector<MultiDegree> blocks_;
  std::vector<std::size_t> offsets_;
};

// Product of degree-level vectors u (layout a) and v (layout b), in layout `ab`.
SparseVec multiply(RelativelyFreeAlgebra& alg, const DegreeLayout& a, const SparseVec& u, const DegreeLayout& b,
                   const SparseVec& v, const DegreeLayout& ab);

}  // namespace veronalt
