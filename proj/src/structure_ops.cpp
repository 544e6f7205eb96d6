#include "veronalt/structure_ops.hpp"

#include <string>

#include "veronalt/error.hpp"

namespace veronalt {
namespace {

SparseVec unit(std::size_t i) { return {{static_cast<std::uint32_t>(i), Rational(1)}}; }

SparseVec difference(SparseVec a, const SparseVec& b) {
  axpy(a, Rational(-1), b);
  return a;
}

// Appends v shifted by `offset` to the (sorted) row.
void append(SparseVec& row, const SparseVec& v, std::size_t offset) {
  for (const auto& [c, x] : v) row.emplace_back(static_cast<std::uint32_t>(c + offset), x);
}

}  // namespace

void StructureOps::check_truncation(std::size_t d, std::size_t cutoff) const {
  alg_.check_cap(cutoff);
  if (d == 0 || d >= cutoff)
    throw Error("degree " + std::to_string(d) + " must satisfy 1 <= d < cutoff " + std::to_string(cutoff));
}

std::vector<MultiDegree> StructureOps::multidegrees_between(std::size_t lo, std::size_t hi) const {
  std::vector<MultiDegree> out;
  for (std::size_t t = lo; t <= hi; ++t)
    for (auto& m : multidegrees_of_total(alg_.rank(), t)) out.push_back(std::move(m));
  return out;
}

SparseVec StructureOps::associator(const MultiDegree& a, const SparseVec& u, const MultiDegree& b,
                                   const SparseVec& v, const MultiDegree& c, const SparseVec& w) {
  return difference(alg_.multiply(a + b, alg_.multiply(a, u, b, v), c, w),
                    alg_.multiply(a, u, b + c, alg_.multiply(b, v, c, w)));
}

const std::vector<SparseVec>& StructureOps::nucleus(const MultiDegree& m, std::size_t cutoff) {
  check_truncation(m.total(), cutoff);
  const auto key = std::make_pair(m, cutoff);
  if (auto it = nucleus_.find(key); it != nucleus_.end()) return it->second;

  const std::size_t dim = alg_.quotient_dim(m);
  std::vector<SparseVec> kernel = unit_basis(dim);
  const std::size_t slack = cutoff - m.total();
  for (const auto& a : multidegrees_between(1, slack)) {
    for (const auto& b : multidegrees_between(1, slack - a.total())) {
      if (kernel.empty()) break;
      const std::size_t na = alg_.quotient_dim(a), nb = alg_.quotient_dim(b);
      const std::size_t target = alg_.quotient_dim(m + a + b);
      // Three associators per (u, w): v in each slot.
      std::vector<SparseVec> images(kernel.size());
      std::size_t offset = 0;
      for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
          const SparseVec u = unit(i), w = unit(j);
          for (std::size_t k = 0; k < kernel.size(); ++k) {
            const SparseVec& v = kernel[k];
            append(images[k], associator(m, v, a, u, b, w), offset);
            append(images[k], associator(a, u, m, v, b, w), offset + target);
            append(images[k], associator(a, u, b, w, m, v), offset + 2 * target);
          }
          offset += 3 * target;
        }
      }
      kernel = restrict_kernel(kernel, images, offset, dim);
    }
  }
  return nucleus_.emplace(key, std::move(kernel)).first->second;
}

const std::vector<SparseVec>& StructureOps::center(const MultiDegree& m, std::size_t cutoff) {
  const auto key = std::make_pair(m, cutoff);
  if (auto it = center_.find(key); it != center_.end()) return it->second;
  std::vector<SparseVec> kernel = nucleus(m, cutoff);
  const std::size_t dim = alg_.quotient_dim(m);
  for (const auto& a : multidegrees_between(1, cutoff - m.total())) {
    if (kernel.empty()) break;
    const std::size_t target = alg_.quotient_dim(m + a);
    std::vector<SparseVec> images(kernel.size());
    std::size_t offset = 0;
    for (std::size_t i = 0; i < alg_.quotient_dim(a); ++i) {
      for (std::size_t k = 0; k < kernel.size(); ++k)
        append(images[k],
               difference(alg_.multiply(m, kernel[k], a, unit(i)), alg_.multiply(a, unit(i), m, kernel[k])),
               offset);
      offset += target;
    }
    kernel = restrict_kernel(kernel, images, offset, dim);
  }
  return center_.emplace(key, std::move(kernel)).first->second;
}

const std::vector<SparseVec>& StructureOps::assoc_nucleus(const MultiDegree& m, std::size_t cutoff) {
  const auto key = std::make_pair(m, cutoff);
  if (auto it = assoc_nucleus_.find(key); it != assoc_nucleus_.end()) return it->second;
  alg_.check_cap(cutoff);
  const std::size_t dim = alg_.quotient_dim(m);
  if (m.total() == cutoff) return assoc_nucleus_.emplace(key, unit_basis(dim)).first->second;

  // Constraints only point to higher degrees, so the greatest fixed point is
  // reached in one pass from the cutoff downwards (driven by the recursion).
  std::vector<SparseVec> kernel = nucleus(m, cutoff);
  for (const auto& a : multidegrees_between(1, cutoff - m.total())) {
    if (kernel.empty()) break;
    const MultiDegree target = m + a;
    Echelon upper(alg_.quotient_dim(target));
    for (const auto& v : assoc_nucleus(target, cutoff)) upper.insert(v);
    const std::size_t tdim = upper.cols();
    std::vector<SparseVec> images(kernel.size());
    std::size_t offset = 0;
    for (std::size_t i = 0; i < alg_.quotient_dim(a); ++i) {
      for (std::size_t k = 0; k < kernel.size(); ++k) {
        append(images[k], upper.reduce(alg_.multiply(m, kernel[k], a, unit(i))), offset);
        append(images[k], upper.reduce(alg_.multiply(a, unit(i), m, kernel[k])), offset + tdim);
      }
      offset += 2 * tdim;
    }
    kernel = restrict_kernel(kernel, images, offset, dim);
  }
  return assoc_nucleus_.emplace(key, std::move(kernel)).first->second;
}

const std::vector<SparseVec>& StructureOps::d_chain(std::size_t i, const MultiDegree& m) {
  const auto key = std::make_pair(i, m);
  if (auto it = d_chain_.find(key); it != d_chain_.end()) return it->second;
  alg_.check_cap(m.total());
  const std::size_t dim = alg_.quotient_dim(m);
  if (i == 0) return d_chain_.emplace(key, unit_basis(dim)).first->second;

  Echelon span(dim);
  auto full = [&] { return span.rank() == dim; };
  // Ideal closure through the lower components of D_i.
  for (const auto& a : sub_multidegrees(m)) {
    if (a == m || full()) continue;
    const MultiDegree b = m - a;
    const auto lower_a = d_chain(i, a);
    const auto lower_b = d_chain(i, b);
    for (std::size_t j = 0; j < alg_.quotient_dim(b) && !full(); ++j)
      for (const auto& v : lower_a) span.insert(alg_.multiply(a, v, b, unit(j)));
    for (std::size_t j = 0; j < alg_.quotient_dim(a) && !full(); ++j)
      for (const auto& v : lower_b) span.insert(alg_.multiply(a, unit(j), b, v));
  }
  // Generators (v, u, w) with v in D_{i-1}.
  for (const auto& a : sub_multidegrees(m)) {
    if (m.total() < a.total() + 2 || full()) continue;
    const auto prev = d_chain(i - 1, a);
    if (prev.empty()) continue;
    const MultiDegree rest = m - a;
    for (const auto& b : sub_multidegrees(rest)) {
      if (b == rest) continue;
      const MultiDegree c = rest - b;
      for (std::size_t j = 0; j < alg_.quotient_dim(b) && !full(); ++j)
        for (std::size_t k = 0; k < alg_.quotient_dim(c) && !full(); ++k)
          for (const auto& v : prev) span.insert(associator(a, v, b, unit(j), c, unit(k)));
    }
  }
  span.make_reduced();
  return d_chain_.emplace(key, span.basis()).first->second;
}

GradedSubspace StructureOps::nucleus_component(std::size_t d, std::size_t cutoff) {
  check_truncation(d, cutoff);
  GradedSubspace out{cutoff, {}};
  for (const auto& m : multidegrees_of_total(alg_.rank(), d)) out.basis[m] = nucleus(m, cutoff);
  return out;
}

GradedSubspace StructureOps::center_component(std::size_t d, std::size_t cutoff) {
  check_truncation(d, cutoff);
  GradedSubspace out{cutoff, {}};
  for (const auto& m : multidegrees_of_total(alg_.rank(), d)) out.basis[m] = center(m, cutoff);
  return out;
}

GradedSubspace StructureOps::assoc_nucleus_component(std::size_t d, std::size_t cutoff) {
  check_truncation(d, cutoff);
  GradedSubspace out{cutoff, {}};
  for (const auto& m : multidegrees_of_total(alg_.rank(), d)) out.basis[m] = assoc_nucleus(m, cutoff);
  return out;
}

GradedSubspace StructureOps::associator_ideal_component(const MultiDegree& m) { return d_chain_component(1, m); }

GradedSubspace StructureOps::d_chain_component(std::size_t i, const MultiDegree& m) {
  GradedSubspace out;
  out.basis[m] = d_chain(i, m);
  return out;
}

StructureOps::ClosureReport StructureOps::commutator_closure(std::size_t cutoff) {
  ClosureReport report;
  if (cutoff < 3) return report;
  for (const auto& m : multidegrees_between(1, cutoff - 2)) {
    const auto& basis = nucleus(m, cutoff);
    for (std::size_t g = 0; g < alg_.rank(); ++g) {
      const MultiDegree e = MultiDegree::unit(alg_.rank(), g);
      Echelon upper(alg_.quotient_dim(m + e));
      for (const auto& v : nucleus(m + e, cutoff)) upper.insert(v);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        ++report.checked;
        const SparseVec c = difference(alg_.multiply(m, basis[k], e, unit(0)), alg_.multiply(e, unit(0), m, basis[k]));
        if (!upper.contains(c)) report.failures.emplace_back(m, k);
      }
    }
  }
  return report;
}

StructureOps::ProductReport StructureOps::ud_diagnostic(std::size_t cutoff) {
  ProductReport report;
  if (cutoff < 3) return report;
  for (const auto& m : multidegrees_between(1, cutoff - 2)) {
    const auto& u = assoc_nucleus(m, cutoff);
    if (u.empty()) continue;
    for (const auto& b : multidegrees_between(3, cutoff - m.total())) {
      for (const auto& w : associator_ideal(b)) {
        for (const auto& v : u) {
          report.checked += 2;
          if (!alg_.multiply(m, v, b, w).empty()) ++report.nonzero;
          if (!alg_.multiply(b, w, m, v).empty()) ++report.nonzero;
        }
      }
    }
  }
  return report;
}

std::optional<std::size_t> pigeonhole_witness(std::size_t n, const std::vector<std::size_t>& residues) {
  if (n < 2) throw Error("pigeonhole needs n >= 2");
  std::vector<std::size_t> count(n, 0);
  for (std::size_t r : residues) {
    if (r < 1 || r >= n)
      throw Error("residue " + std::to_string(r) + " outside 1.." + std::to_string(n - 1));
    ++count[r];
  }
  for (std::size_t r = 1; r < n; ++r)
    if (count[r] >= n) return r;
  return std::nullopt;
}

}  // namespace veronalt
