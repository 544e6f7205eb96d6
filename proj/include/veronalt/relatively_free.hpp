#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "veronalt/free_poly.hpp"
#include "veronalt/identity_set.hpp"
#include "veronalt/monomial.hpp"
#include "veronalt/multidegree.hpp"
#include "veronalt/sparse.hpp"

namespace veronalt {

// Coordinates of an element of one multihomogeneous component of the
// relatively free algebra, on that component's standard monomials.
struct NormalVector {
  MultiDegree multidegree;
  SparseVec coords;
  friend bool operator==(const NormalVector&, const NormalVector&) = default;
};

// Total degree 8 for rank <= 2, 6 for rank 3, 5 otherwise.
std::size_t default_degree_cap(std::size_t rank);

// One multihomogeneous component of the relatively free algebra.
//
// The T-ideal component I_m is spanned by (a) products L*R in which L or R
// lies in a lower T-ideal component and (b) substitution instances of the
// multilinearized identities. Part (a) is exactly the kernel of the map
// F_m -> P_m = sum over splits a+b=m of Q_a (x) Q_b, so Q_m is P_m modulo the
// image of (b), and only standard monomials of lower components need to be
// substituted into the identities. Columns of P_m are the products of lower
// standard monomials, kept in canonical monomial order; eliminating with
// pivots on the earliest columns reproduces the reduced row echelon form of
// I_m in monomial coordinates, and the non-pivot monomials are the standard
// monomials of m.
class Component {
 public:
  const MultiDegree& multidegree() const { return m_; }
  std::size_t quotient_dim() const { return standard_.size(); }
  // Number of tree monomials of this multidegree.
  std::uint64_t monomial_count() const { return shape_count(m_.total()) * multinomial(m_); }
  // Size of the product space P_m (0 for generators).
  std::size_t product_dim() const { return std_index_.size(); }
  const std::vector<Monomial>& standard() const { return standard_; }
  std::optional<std::size_t> standard_index(const Monomial& t) const;

  // Normal form of (left standard i) * (right standard j) where left has multidegree `left`.
  // Returns a single unit entry for standard products.
  SparseVec product_normal_form(const MultiDegree& left, std::size_t i, std::size_t j) const;

 private:
  friend class RelativelyFreeAlgebra;
  friend class ComponentCache;

  struct Block {
    MultiDegree left;
    MultiDegree right;
    std::size_t right_dim = 0;
    std::vector<std::uint32_t> column;  // column[i * right_dim + j]
  };

  std::size_t block_code(const MultiDegree& left) const;
  const Block& block(const MultiDegree& left) const;

  MultiDegree m_;
  std::vector<Monomial> standard_;
  std::vector<std::uint32_t> stride_;
  std::vector<std::int32_t> block_of_code_;
  std::vector<Block> blocks_;
  std::vector<std::int32_t> std_index_;  // per product column: standard index or -1
  std::vector<SparseVec> column_nf_;     // per product column: normal form when not standard
};

// The relatively free algebra of a variety on `rank` generators, built
// component by component on demand and memoized. Components are immutable
// once built; queries are safe from several threads.
class RelativelyFreeAlgebra {
 public:
  RelativelyFreeAlgebra(IdentitySet ids, std::size_t rank, std::optional<std::size_t> cap = std::nullopt);

  const IdentitySet& identities() const { return ids_; }
  std::size_t rank() const { return rank_; }
  std::size_t cap() const { return cap_; }
  void set_threads(int threads) { threads_ = threads < 1 ? 1 : threads; }
  int threads() const { return threads_; }

  // Throws CapExceeded when the degree is beyond the cap.
  void check_cap(std::size_t degree) const;

  const Component& component(const MultiDegree& m);
  std::size_t quotient_dim(const MultiDegree& m) { return component(m).quotient_dim(); }
  // Builds every component of total degree <= max_degree.
  void build_up_to(std::size_t max_degree);
  // dims[d-1] = sum of quotient dims over multidegrees of total d, for d = 1..max_degree.
  std::vector<std::size_t> dim_table(std::size_t max_degree);

  NormalVector normal_form(const Monomial& t);
  // Per multihomogeneous component of p; components that vanish are kept with empty coords.
  std::map<MultiDegree, SparseVec> normal_form(const FreePoly& p);
  // p must be multihomogeneous of multidegree m (or zero); throws Error otherwise.
  SparseVec normal_form(const MultiDegree& m, const FreePoly& p);
  bool is_zero(const FreePoly& p);

  SparseVec multiply(const MultiDegree& a, const SparseVec& u, const MultiDegree& b, const SparseVec& v);
  NormalVector multiply(const NormalVector& u, const NormalVector& v) {
    return {u.multidegree + v.multidegree, multiply(u.multidegree, u.coords, v.multidegree, v.coords)};
  }
  NormalVector basis_vector(const MultiDegree& m, std::size_t i);

  // The element with the given coordinates, written on standard monomials.
  FreePoly to_poly(const MultiDegree& m, const SparseVec& coords);
  // t - (normal form of t) for a non-standard monomial t; zero for standard ones.
  FreePoly echelon_row(const Monomial& t);
  // Reduced echelon basis of the T-ideal component in canonical monomial coordinates,
  // ordered by pivot. Enumerates every monomial of m.
  std::vector<FreePoly> echelon_basis(const MultiDegree& m);

 private:
  const Component* find(const MultiDegree& m) const;
  const Component& built(const MultiDegree& m) const;
  void ensure(const MultiDegree& m);
  void build_all(const std::vector<MultiDegree>& todo);
  std::unique_ptr<Component> build(const MultiDegree& m) const;
  void layout_products(Component& c) const;
  std::vector<SparseVec> relation_rows(const Component& c) const;
  SparseVec multiply_built(const MultiDegree& a, const SparseVec& u, const MultiDegree& b, const SparseVec& v) const;

  IdentitySet ids_;
  std::size_t rank_;
  std::size_t cap_;
  int threads_ = 1;
  mutable std::shared_mutex map_mutex_;
  std::mutex build_mutex_;
  std::map<MultiDegree, std::unique_ptr<Component>> components_;
};

}  // namespace veronalt
