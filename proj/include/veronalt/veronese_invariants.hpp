#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "veronalt/free_poly.hpp"
#include "veronalt/graded.hpp"
#include "veronalt/relatively_free.hpp"

namespace veronalt {

// A subspace of one homogeneous component in DegreeLayout coordinates.
struct DegreeSubspace {
  std::size_t degree = 0;
  std::size_t ambient_dim = 0;
  std::vector<SparseVec> basis;  // reduced echelon
  std::size_t dim() const { return basis.size(); }
};

struct DegreeReport {
  std::size_t degree = 0;
  std::size_t target_dim = 0;
  std::size_t generated_dim = 0;
  std::size_t new_count = 0;
  std::vector<SparseVec> new_generators;  // DegreeLayout coordinates
};

struct GeneratorReport {
  std::vector<DegreeReport> degrees;
  const DegreeReport* at(std::size_t degree) const;
  // new_count per reported degree, in order.
  std::vector<std::size_t> new_counts() const;
};

struct VeroneseConfig {
  std::size_t n = 2;
  std::size_t max_degree = 0;
};

DegreeSubspace veronese_component(RelativelyFreeAlgebra& alg, std::size_t n, std::size_t degree);
// Degrees n, 2n, ... <= max_degree.
GeneratorReport new_generators(RelativelyFreeAlgebra& alg, const VeroneseConfig& cfg);

// A finite group acting linearly on the generators, x_i -> sum_j M[i][j] x_j.
// Either a group generated by rational matrices, or the cyclic group of
// scalars of order k, which acts on degree d by a primitive k-th root of
// unity to the power d and so needs no matrices over Q.
class LinearGroupAction {
 public:
  using Matrix = std::vector<std::vector<Rational>>;
  static constexpr std::size_t kDefaultBound = 10000;

  // Closure of the generated group; throws Error if it exceeds `bound`.
  static LinearGroupAction from_matrices(std::size_t rank, std::vector<Matrix> generators,
                                         std::size_t bound = kDefaultBound);
  static LinearGroupAction scalar(std::size_t rank, std::size_t order);
  static LinearGroupAction trivial(std::size_t rank) { return scalar(rank, 1); }
  static LinearGroupAction swap(std::size_t rank, std::size_t i, std::size_t j);

  // Matrices as blocks of whitespace-separated rationals, blocks separated by
  // blank lines; '#' starts a comment; a line "scalar k" selects the scalar group.
  static LinearGroupAction parse(std::size_t rank, const std::string& text, std::size_t bound = kDefaultBound);
  static LinearGroupAction from_file(std::size_t rank, const std::filesystem::path& path,
                                     std::size_t bound = kDefaultBound);

  std::size_t rank() const { return rank_; }
  std::size_t order() const { return scalar_order_ ? *scalar_order_ : elements_.size(); }
  std::optional<std::size_t> scalar_order() const { return scalar_order_; }
  const std::vector<Matrix>& generators() const { return generators_; }
  const std::vector<Matrix>& elements() const { return elements_; }

  // Image of p under the group element given as a matrix.
  FreePoly act(const Matrix& g, const FreePoly& p) const;

 private:
  std::size_t rank_ = 0;
  std::optional<std::size_t> scalar_order_;
  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
};

// (1/|G|) sum_g p^g in the free nonassociative algebra.
FreePoly reynolds(const LinearGroupAction& action, const FreePoly& p);

// The action on one homogeneous component of the relatively free algebra.
class QuotientAction {
 public:
  QuotientAction(RelativelyFreeAlgebra& alg, const LinearGroupAction& action);
  RelativelyFreeAlgebra& algebra() { return alg_; }
  const LinearGroupAction& action() const { return action_; }
  // Image of basis vector `i` of degree d under element `g`, in DegreeLayout coordinates.
  const SparseVec& image(std::size_t g, std::size_t degree, std::size_t i);
  SparseVec apply(std::size_t g, std::size_t degree, const SparseVec& v);
  SparseVec reynolds(std::size_t degree, const SparseVec& v);
  const DegreeLayout& layout(std::size_t degree);

 private:
  RelativelyFreeAlgebra& alg_;
  const LinearGroupAction& action_;
  std::map<std::size_t, std::unique_ptr<DegreeLayout>> layouts_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::optional<SparseVec>>> images_;
};

DegreeSubspace invariant_component(QuotientAction& qa, std::size_t degree);
GeneratorReport invariant_generators(QuotientAction& qa, std::size_t max_degree);

}  // namespace veronalt
