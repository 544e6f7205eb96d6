#include <random>

#include "doctest.h"
#include "support.hpp"
#include "veronalt/error.hpp"
#include "veronalt/identity_set.hpp"
#include "veronalt/relatively_free.hpp"
#include "veronalt/term_parser.hpp"
#include "veronalt/veronese_invariants.hpp"

using namespace veronalt;

namespace {

bool same_subspace(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b) { return a == b; }

}  // namespace

TEST_CASE("veronese components") {
  RelativelyFreeAlgebra alt(IdentitySet::alternative(), 2);
  CHECK(veronese_component(alt, 2, 3).dim() == 0);
  CHECK(veronese_component(alt, 2, 2).dim() == 4);
  RelativelyFreeAlgebra assoc(IdentitySet::associative(), 2);
  CHECK(veronese_component(assoc, 3, 6).dim() == 64);
  CHECK_THROWS_AS(veronese_component(assoc, 1, 2), Error);
  CHECK_THROWS_AS(veronese_component(assoc, 2, 9), CapExceeded);
}

TEST_CASE("new generators of Veronese subalgebras") {
  for (const auto& ids : {IdentitySet::associative(), IdentitySet::alternative()}) {
    RelativelyFreeAlgebra alg(ids, 2);
    const auto r = new_generators(alg, {2, 8});
    CHECK(r.new_counts() == std::vector<std::size_t>{4, 0, 0, 0});
    for (const auto& d : r.degrees) CHECK(d.new_count == d.target_dim - d.generated_dim);
  }
  RelativelyFreeAlgebra ralt(IdentitySet::right_alternative(), 2);
  const auto r = new_generators(ralt, {2, 6});
  REQUIRE(r.degrees.size() == 3);
  CHECK(r.at(4)->new_count > 0);
  CHECK(r.at(6)->new_count > 0);
  // Free nonassociative n = 2: generators of degree 2 and new ones at degree 4
  // (products of two degree-2 elements cannot reach x(x(xx))).
  RelativelyFreeAlgebra free2(IdentitySet::nonassociative(), 2);
  const auto f = new_generators(free2, {2, 4});
  CHECK(f.at(2)->new_count == 4);
  CHECK(f.at(4)->generated_dim == 16);
  CHECK(f.at(4)->new_count == 80 - 16);
}

TEST_CASE("Veronese closure: products of Veronese components stay Veronese") {
  RelativelyFreeAlgebra alg(IdentitySet::right_alternative(), 2);
  const DegreeLayout l2(alg, 2), l4(alg, 4), l6(alg, 6), l3(alg, 3);
  for (const auto& u : veronese_component(alg, 2, 2).basis)
    for (const auto& v : veronese_component(alg, 2, 4).basis) {
      const SparseVec w = multiply(alg, l2, u, l4, v, l6);
      for (const auto& [c, x] : w) CHECK(c < l6.dim());
    }
  CHECK(veronese_component(alg, 2, 3).basis.empty());
}

TEST_CASE("reynolds examples") {
  const auto minus = LinearGroupAction::from_matrices(2, {{{Rational(-1), Rational(0)}, {Rational(0), Rational(-1)}}});
  CHECK(minus.order() == 2);
  CHECK(reynolds(minus, parse("x*y", 2)) == parse("x*y", 2));
  CHECK(reynolds(minus, parse("x", 2)).is_zero());
  const auto swap = LinearGroupAction::swap(2, 0, 1);
  CHECK(swap.order() == 2);
  CHECK(reynolds(swap, parse("x*y", 2)) == parse("1/2 x*y + 1/2 y*x", 2));
  const auto s3 = LinearGroupAction::scalar(2, 3);
  CHECK(reynolds(s3, parse("x + x*y + (x*y)*x", 2)) == parse("(x*y)*x", 2));
}

TEST_CASE("reynolds is an idempotent projector onto invariants") {
  std::mt19937_64 rng(4);
  const auto swap = LinearGroupAction::swap(3, 0, 2);
  const auto cyc = LinearGroupAction::from_matrices(
      3, {{{Rational(0), Rational(1), Rational(0)}, {Rational(0), Rational(0), Rational(1)}, {Rational(1), Rational(0), Rational(0)}}});
  CHECK(cyc.order() == 3);
  for (int trial = 0; trial < 30; ++trial) {
    const FreePoly p = veronalt::testing::random_poly(rng, 4, 4, 3, 7);
    for (const auto* g : {&swap, &cyc}) {
      const FreePoly r = reynolds(*g, p);
      CHECK(reynolds(*g, r) == r);
      for (const auto& m : g->generators()) CHECK(g->act(m, r) == r);
    }
  }
}

TEST_CASE("group closure") {
  // Rotation by 90 degrees: order 4.
  const auto rot = LinearGroupAction::from_matrices(2, {{{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}}});
  CHECK(rot.order() == 4);
  // Infinite order shear.
  CHECK_THROWS_AS(LinearGroupAction::from_matrices(2, {{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}}}, 50),
                  Error);
  CHECK_THROWS_AS(LinearGroupAction::from_matrices(2, {{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}}}),
                  Error);
  const auto parsed = LinearGroupAction::parse(2, "# swap\n0 1\n1 0\n\n-1 0\n0 -1\n");
  CHECK(parsed.generators().size() == 2);
  CHECK(parsed.order() == 4);
  CHECK(LinearGroupAction::parse(2, "scalar 3\n").scalar_order() == 3u);
  CHECK_THROWS_AS(LinearGroupAction::parse(2, "1 0 0\n0 1 0\n"), Error);
  CHECK_THROWS_AS(LinearGroupAction::parse(2, "1 a\n0 1\n"), Error);
}

TEST_CASE("invariant components") {
  RelativelyFreeAlgebra assoc(IdentitySet::associative(), 2);
  const auto swap = LinearGroupAction::swap(2, 0, 1);
  QuotientAction qa(assoc, swap);
  const auto inv2 = invariant_component(qa, 2);
  CHECK(inv2.dim() == 2);
  const DegreeLayout l2(assoc, 2);
  std::vector<SparseVec> expected{l2.normal_form(assoc, parse("x*x + y*y", 2)),
                                  l2.normal_form(assoc, parse("x*y + y*x", 2))};
  Echelon e(l2.dim());
  for (const auto& v : expected) e.insert(v);
  e.make_reduced();
  CHECK(same_subspace(inv2.basis, e.basis()));

  RelativelyFreeAlgebra alt(IdentitySet::alternative(), 2);
  const auto minus = LinearGroupAction::from_matrices(2, {{{Rational(-1), Rational(0)}, {Rational(0), Rational(-1)}}});
  QuotientAction qm(alt, minus);
  for (std::size_t d = 1; d <= 6; d += 2) CHECK(invariant_component(qm, d).dim() == 0);
}

TEST_CASE("scalar groups give the Veronese components") {
  RelativelyFreeAlgebra alg(IdentitySet::alternative(), 2);
  const auto minus = LinearGroupAction::from_matrices(2, {{{Rational(-1), Rational(0)}, {Rational(0), Rational(-1)}}});
  for (std::size_t n : {2u, 3u}) {
    const auto scalar = LinearGroupAction::scalar(2, n);
    QuotientAction qs(alg, scalar);
    for (std::size_t d = 1; d <= 6; ++d) CHECK(invariant_component(qs, d).basis == veronese_component(alg, n, d).basis);
  }
  QuotientAction qm(alg, minus);
  for (std::size_t d = 1; d <= 6; ++d) CHECK(invariant_component(qm, d).basis == veronese_component(alg, 2, d).basis);
  // Report for the order-2 scalar group matches the Veronese report on even degrees.
  const auto inv = invariant_generators(qm, 6);
  const auto ver = new_generators(alg, {2, 6});
  for (const auto& r : ver.degrees) CHECK(inv.at(r.degree)->new_count == r.new_count);
  for (std::size_t d : {1u, 3u, 5u}) CHECK(inv.at(d)->target_dim == 0);
}

TEST_CASE("invariant generator reports") {
  RelativelyFreeAlgebra assoc(IdentitySet::associative(), 2);
  const auto trivial = LinearGroupAction::trivial(2);
  QuotientAction qt(assoc, trivial);
  CHECK(invariant_generators(qt, 5).new_counts() == std::vector<std::size_t>{2, 0, 0, 0, 0});

  const auto swap = LinearGroupAction::swap(2, 0, 1);
  QuotientAction qs(assoc, swap);
  const auto r = invariant_generators(qs, 6);
  CHECK(r.at(1)->new_count == 1);
  std::size_t beyond = 0;
  for (const auto& d : r.degrees)
    if (d.degree > 2) beyond += d.new_count;
  CHECK(beyond > 0);
  // No word is fixed by swapping the letters, so the orbit sums give 2^(d-1).
  for (const auto& d : r.degrees) CHECK(d.target_dim == (std::size_t{1} << (d.degree - 1)));
}
