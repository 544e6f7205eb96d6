#include "veronalt/graded.hpp"

#include <algorithm>

#include "veronalt/error.hpp"

namespace veronalt {

std::vector<SparseVec> reduced_span(const std::vector<SparseVec>& vectors, std::size_t cols) {
  Echelon e(cols);
  for (const auto& v : vectors) {
    if (e.rank() == cols) break;
    e.insert(v);
  }
  e.make_reduced();
  return e.basis();
}

std::vector<SparseVec> restrict_kernel(const std::vector<SparseVec>& basis, const std::vector<SparseVec>& images,
                                       std::size_t image_cols, std::size_t cols) {
  std::vector<SparseVec> kept;
  for (const auto& c : left_kernel(images, image_cols)) {
    SparseVec v;
    for (const auto& [k, x] : c) axpy(v, x, basis[k]);
    kept.push_back(std::move(v));
  }
  return reduced_span(kept, cols);
}

std::vector<SparseVec> unit_basis(std::size_t dim) {
  std::vector<SparseVec> out(dim);
  for (std::size_t i = 0; i < dim; ++i) out[i].emplace_back(static_cast<std::uint32_t>(i), Rational(1));
  return out;
}

std::size_t GradedSubspace::dim() const {
  std::size_t d = 0;
  for (const auto& [m, b] : basis) d += b.size();
  return d;
}

std::size_t GradedSubspace::dim(const MultiDegree& m) const {
  auto it = basis.find(m);
  return it == basis.end() ? 0 : it->second.size();
}

DegreeLayout::DegreeLayout(RelativelyFreeAlgebra& alg, std::size_t degree) : degree_(degree) {
  alg.check_cap(degree);
  blocks_ = multidegrees_of_total(alg.rank(), degree);
  offsets_.push_back(0);
  for (const auto& m : blocks_) {
    dim_ += alg.quotient_dim(m);
    offsets_.push_back(dim_);
  }
}

std::size_t DegreeLayout::block_of(const MultiDegree& m) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), m);
  if (it == blocks_.end() || !(*it == m)) throw Error("multidegree " + m.to_string() + " not in this layout");
  return static_cast<std::size_t>(it - blocks_.begin());
}

SparseVec DegreeLayout::embed(const MultiDegree& m, const SparseVec& v) const {
  const auto off = static_cast<std::uint32_t>(offsets_[block_of(m)]);
  SparseVec out = v;
  for (auto& [c, x] : out) c += off;
  return out;
}

std::map<MultiDegree, SparseVec> DegreeLayout::split(const SparseVec& v) const {
  std::map<MultiDegree, SparseVec> out;
  std::size_t b = 0;
  for (const auto& [c, x] : v) {
    while (c >= offsets_[b + 1]) ++b;
    out[blocks_[b]].emplace_back(static_cast<std::uint32_t>(c - offsets_[b]), x);
  }
  return out;
}

SparseVec DegreeLayout::normal_form(RelativelyFreeAlgebra& alg, const FreePoly& p) const {
  SparseVec out;
  for (const auto& [m, v] : alg.normal_form(p)) {
    if (m.total() != degree_) throw Error("polynomial is not homogeneous of degree " + std::to_string(degree_));
    const SparseVec e = embed(m, v);
    out.insert(out.end(), e.begin(), e.end());
  }
  // Blocks come out of the map in ascending order, so `out` is already sorted.
  return out;
}

FreePoly DegreeLayout::to_poly(RelativelyFreeAlgebra& alg, const SparseVec& v) const {
  FreePoly p;
  for (const auto& [m, coords] : split(v)) p += alg.to_poly(m, coords);
  return p;
}

SparseVec multiply(RelativelyFreeAlgebra& alg, const DegreeLayout& a, const SparseVec& u, const DegreeLayout& b,
                   const SparseVec& v, const DegreeLayout& ab) {
  std::vector<std::pair<std::uint32_t, Rational>> entries;
  const auto us = a.split(u);
  const auto vs = b.split(v);
  for (const auto& [ma, cu] : us)
    for (const auto& [mb, cv] : vs) {
      const SparseVec e = ab.embed(ma + mb, alg.multiply(ma, cu, mb, cv));
      entries.insert(entries.end(), e.begin(), e.end());
    }
  return collect(std::move(entries));
}

}  // namespace veronalt
