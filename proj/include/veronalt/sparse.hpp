#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "veronalt/rational.hpp"

namespace veronalt {

// Sorted by column, no explicit zeros.
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

// y += a * x
void axpy(SparseVec& y, const Rational& a, const SparseVec& x);
SparseVec scaled(SparseVec v, const Rational& a);
// Builds a sorted vector from unsorted (column, value) pairs, summing duplicates.
SparseVec collect(std::vector<std::pair<std::uint32_t, Rational>> entries);

// Exact row echelon form over Q with pivots on the earliest columns.
//
// Rows are stored normalized (leading coefficient 1). insert() reduces the
// new row against every stored row; make_reduced() back-substitutes so that
// each row is zero on every other pivot column, which is the unique reduced
// row echelon form of the span.
class Echelon {
 public:
  explicit Echelon(std::size_t cols = 0) : row_of_(cols, -1) {}

  std::size_t cols() const { return row_of_.size(); }
  std::size_t rank() const { return rows_.size(); }

  // True when v enlarged the span.
  bool insert(const SparseVec& v);
  // Remainder of v modulo the span; it has no entries on pivot columns.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  void make_reduced();
  bool reduced() const { return reduced_; }

  bool is_pivot(std::uint32_t col) const { return row_of_[col] >= 0; }
  const SparseVec& pivot_row(std::uint32_t col) const { return rows_[static_cast<std::size_t>(row_of_[col])]; }
  std::vector<std::uint32_t> pivots() const;
  // Rows ordered by pivot column.
  std::vector<SparseVec> basis() const;

 private:
  std::vector<std::int32_t> row_of_;
  std::vector<SparseVec> rows_;
  bool reduced_ = true;
};

// Basis of { c : sum_i c_i rows[i] = 0 }, each kernel vector indexed by row number.
std::vector<SparseVec> left_kernel(std::span<const SparseVec> rows, std::size_t cols);

// Rank of a family of vectors.
std::size_t rank_of(std::span<const SparseVec> rows, std::size_t cols);

}  // namespace veronalt
