#include <functional>

#include "doctest.h"
#include "veronalt/error.hpp"
#include "veronalt/identity_set.hpp"
#include "veronalt/relatively_free.hpp"
#include "veronalt/structure_ops.hpp"
#include "veronalt/term_parser.hpp"

using namespace veronalt;

namespace {

std::size_t component_dim(RelativelyFreeAlgebra& alg, std::size_t d) {
  std::size_t n = 0;
  for (const auto& m : multidegrees_of_total(alg.rank(), d)) n += alg.quotient_dim(m);
  return n;
}

bool contained(RelativelyFreeAlgebra& alg, const MultiDegree& m, const std::vector<SparseVec>& small,
               const std::vector<SparseVec>& big) {
  Echelon e(alg.quotient_dim(m));
  for (const auto& v : big) e.insert(v);
  for (const auto& v : small)
    if (!e.contains(v)) return false;
  return true;
}

// Oracle for nuclear elements: check (v,u,w) on all monomials (not only
// standard ones) via polynomial arithmetic and the normal form.
bool nuclear_by_polys(RelativelyFreeAlgebra& alg, const FreePoly& v, std::size_t cutoff) {
  const std::size_t d = v.max_degree();
  for (std::size_t a = 1; d + a + 1 <= cutoff; ++a)
    for (std::size_t b = 1; d + a + b <= cutoff; ++b)
      for (const auto& ma : multidegrees_of_total(alg.rank(), a))
        for (const auto& mb : multidegrees_of_total(alg.rank(), b))
          for (const auto& u : enumerate_monomials(ma))
            for (const auto& w : enumerate_monomials(mb)) {
              const FreePoly U = FreePoly::monomial(u), W = FreePoly::monomial(w);
              if (!alg.is_zero(associator(v, U, W)) || !alg.is_zero(associator(U, v, W)) ||
                  !alg.is_zero(associator(U, W, v)))
                return false;
            }
  return true;
}

}  // namespace

TEST_CASE("nucleus examples") {
  RelativelyFreeAlgebra assoc(IdentitySet::associative(), 2);
  StructureOps a(assoc);
  for (std::size_t d = 1; d <= 4; ++d) CHECK(a.nucleus_component(d, 6).dim() == component_dim(assoc, d));

  RelativelyFreeAlgebra alt2(IdentitySet::alternative(), 2);
  StructureOps s2(alt2);
  for (std::size_t d = 1; d <= 4; ++d) CHECK(s2.nucleus_component(d, 7).dim() == component_dim(alt2, d));

  RelativelyFreeAlgebra alt3(IdentitySet::alternative(), 3);
  StructureOps s3(alt3);
  CHECK(s3.nucleus_component(1, 5).dim() == 0);
  CHECK_THROWS_AS(s3.nucleus_component(3, 3), Error);
  CHECK_THROWS_AS(s3.nucleus_component(1, 7), CapExceeded);
}

TEST_CASE("nucleus basis vectors pass the direct polynomial test") {
  RelativelyFreeAlgebra alt3(IdentitySet::alternative(), 3);
  StructureOps ops(alt3);
  const std::size_t cutoff = 6;
  for (const auto& m : multidegrees_of_total(3, 4)) {
    const auto& basis = ops.nucleus(m, cutoff);
    for (const auto& v : basis) CHECK(nuclear_by_polys(alt3, alt3.to_poly(m, v), cutoff));
    // Standard monomials outside the nucleus fail it.
    if (basis.empty())
      for (std::size_t i = 0; i < alt3.quotient_dim(m); ++i)
        CHECK_FALSE(nuclear_by_polys(alt3, FreePoly::monomial(alt3.component(m).standard()[i]), cutoff));
  }
}

TEST_CASE("center examples") {
  RelativelyFreeAlgebra assoc1(IdentitySet::associative(), 1);
  StructureOps a(assoc1);
  for (std::size_t d = 1; d <= 4; ++d) CHECK(a.center_component(d, 6).dim() == 1);
  RelativelyFreeAlgebra alt2(IdentitySet::alternative(), 2);
  StructureOps s2(alt2);
  CHECK(s2.center_component(1, 5).dim() == 0);
  RelativelyFreeAlgebra alt3(IdentitySet::alternative(), 3);
  StructureOps s3(alt3);
  CHECK(s3.center_component(1, 5).dim() == 0);
}

TEST_CASE("associator ideal examples") {
  RelativelyFreeAlgebra assoc(IdentitySet::associative(), 3);
  StructureOps a(assoc);
  for (std::size_t d = 1; d <= 5; ++d)
    for (const auto& m : multidegrees_of_total(3, d)) CHECK(a.associator_ideal(m).empty());

  RelativelyFreeAlgebra alt3(IdentitySet::alternative(), 3);
  StructureOps s3(alt3);
  const auto& d111 = s3.associator_ideal({1, 1, 1});
  CHECK(d111.size() == 1);
  // It is spanned by the associator itself.
  const SparseVec assoc_nf = alt3.normal_form({1, 1, 1}, parse("assoc(x,y,z)", 3));
  CHECK(contained(alt3, {1, 1, 1}, {assoc_nf}, d111));
  CHECK(s3.associator_ideal_component({1, 1, 1}).dim() == 1);

  RelativelyFreeAlgebra alt2(IdentitySet::alternative(), 2);
  StructureOps s2(alt2);
  for (std::size_t d = 1; d <= 6; ++d)
    for (const auto& m : multidegrees_of_total(2, d)) CHECK(s2.associator_ideal(m).empty());
}

TEST_CASE("associator ideal matches the quotient by associativity") {
  // dim D(A)_m = dim A_m - dim of the associative quotient (words).
  RelativelyFreeAlgebra alt3(IdentitySet::alternative(), 3);
  StructureOps ops(alt3);
  for (std::size_t d = 1; d <= 5; ++d)
    for (const auto& m : multidegrees_of_total(3, d))
      CHECK(ops.associator_ideal(m).size() == alt3.quotient_dim(m) - multinomial(m));
}

TEST_CASE("D chain") {
  RelativelyFreeAlgebra alt3(IdentitySet::alternative(), 3);
  StructureOps ops(alt3);
  for (std::size_t d = 1; d <= 5; ++d)
    for (const auto& m : multidegrees_of_total(3, d)) {
      CHECK(ops.d_chain(1, m) == ops.associator_ideal(m));
      CHECK(ops.d_chain(0, m).size() == alt3.quotient_dim(m));
      CHECK(contained(alt3, m, ops.d_chain(2, m), ops.d_chain(1, m)));
      CHECK(contained(alt3, m, ops.d_chain(3, m), ops.d_chain(2, m)));
      if (d <= 4) CHECK(ops.d_chain(2, m).empty());
    }
  std::size_t d2 = 0;
  for (const auto& m : multidegrees_of_total(3, 5)) d2 += ops.d_chain(2, m).size();
  CHECK(d2 > 0);
  CHECK(ops.d_chain_component(2, {2, 2, 1}).dim() == ops.d_chain(2, {2, 2, 1}).size());
}

TEST_CASE("associative nucleus") {
  RelativelyFreeAlgebra assoc(IdentitySet::associative(), 2);
  StructureOps a(assoc);
  for (std::size_t d = 1; d <= 4; ++d) CHECK(a.assoc_nucleus_component(d, 6).dim() == component_dim(assoc, d));

  RelativelyFreeAlgebra alt3(IdentitySet::alternative(), 3);
  StructureOps s3(alt3);
  CHECK(s3.assoc_nucleus_component(1, 5).dim() == 0);

  RelativelyFreeAlgebra alt2(IdentitySet::alternative(), 2);
  StructureOps s2(alt2);
  CHECK(s2.assoc_nucleus_component(2, 6).dim() == component_dim(alt2, 2));
}

TEST_CASE("truncation monotonicity and containments") {
  RelativelyFreeAlgebra alt3(IdentitySet::alternative(), 3);
  StructureOps ops(alt3);
  for (std::size_t d = 1; d <= 4; ++d)
    for (const auto& m : multidegrees_of_total(3, d)) {
      for (std::size_t cutoff = d + 1; cutoff < 6; ++cutoff) {
        CHECK(contained(alt3, m, ops.nucleus(m, cutoff + 1), ops.nucleus(m, cutoff)));
        CHECK(contained(alt3, m, ops.center(m, cutoff + 1), ops.center(m, cutoff)));
        CHECK(contained(alt3, m, ops.assoc_nucleus(m, cutoff + 1), ops.assoc_nucleus(m, cutoff)));
      }
      CHECK(contained(alt3, m, ops.center(m, 6), ops.nucleus(m, 6)));
      CHECK(contained(alt3, m, ops.assoc_nucleus(m, 6), ops.nucleus(m, 6)));
    }
  const auto closure = ops.commutator_closure(6);
  CHECK(closure.checked > 0);
  CHECK(closure.failures.empty());
  const auto ud = ops.ud_diagnostic(6);
  CHECK(ud.nonzero == 0);
}

TEST_CASE("pigeonhole examples") {
  CHECK(pigeonhole_witness(2, {1, 1}) == 1u);
  CHECK(pigeonhole_witness(3, {1, 2, 1, 2, 1}) == 1u);
  CHECK_FALSE(pigeonhole_witness(3, {1, 2, 1, 2}).has_value());
  CHECK_THROWS_AS(pigeonhole_witness(3, {0}), Error);
  CHECK_THROWS_AS(pigeonhole_witness(3, {3}), Error);
  CHECK_THROWS_AS(pigeonhole_witness(1, {}), Error);
}

TEST_CASE("pigeonhole exhaustive for n <= 4") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const std::size_t bound = (n - 1) * (n - 1) + 1;
    for (std::size_t size = 0; size <= bound + 1; ++size) {
      // All multisets as nondecreasing sequences.
      std::vector<std::size_t> seq(size, 1);
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t lo) {
        if (pos == size) {
          std::vector<std::size_t> count(n, 0);
          for (auto r : seq) ++count[r];
          bool exists = false;
          for (std::size_t r = 1; r < n; ++r) exists = exists || count[r] >= n;
          const auto w = pigeonhole_witness(n, seq);
          CHECK(w.has_value() == exists);
          if (w) CHECK(count[*w] >= n);
          if (size >= bound) CHECK(w.has_value());
          return;
        }
        for (std::size_t r = lo; r < n; ++r) {
          seq[pos] = r;
          rec(pos + 1, r);
        }
      };
      rec(0, 1);
    }
  }
}
