#include <random>

#include "doctest.h"
#include "veronalt/error.hpp"
#include "veronalt/identity_set.hpp"
#include "veronalt/relatively_free.hpp"
#include "veronalt/split_backend.hpp"
#include "veronalt/term_parser.hpp"

using namespace veronalt;

namespace {

RationalOctonion random_octonion(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-20, 20);
  RationalOctonion o;
  for (std::size_t i = 0; i < 8; ++i) o[i] = Rational(Integer(d(rng)), Integer(1 + (d(rng) & 3)));
  for (std::size_t i = 0; i < 8; ++i) o[i].canonicalize();
  return o;
}

Octonion as_constant(const Poly& p) { return Octonion::scalar(p); }

}  // namespace

TEST_CASE("structure constants come from the Zorn product") {
  const auto& table = zorn_structure_constants();
  CHECK(!table.empty());
  std::size_t count = 0;
  for (const auto& sc : table) {
    CHECK((sc.sign == 1 || sc.sign == -1));
    ++count;
  }
  CHECK(count == 32);
}

TEST_CASE("concrete octonions: unit, alternativity, norm") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_octonion(rng), b = random_octonion(rng);
    CHECK(RationalOctonion::unit() * a == a);
    CHECK(a * RationalOctonion::unit() == a);
    CHECK(associator(a, a, b).is_zero());
    CHECK(associator(b, a, a).is_zero());
    CHECK(associator(a, b, a).is_zero());
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK(a * a.conjugate() == RationalOctonion::scalar(a.norm()));
    CHECK(a.trace() == a[0] + a[7]);
    // Quadratic: a^2 - t(a) a + n(a) = 0.
    CHECK(a * a - scale(a.trace(), a) + RationalOctonion::scalar(a.norm()) == RationalOctonion{});
  }
  // Not associative.
  bool found = false;
  for (int trial = 0; trial < 20 && !found; ++trial) {
    const auto a = random_octonion(rng), b = random_octonion(rng), c = random_octonion(rng);
    found = !associator(a, b, c).is_zero();
  }
  CHECK(found);
}

TEST_CASE("generic octonions: alternativity and centrality of trace and norm") {
  SplitBackend b;
  const Octonion& X = b.generic(0);
  const Octonion& Y = b.generic(1);
  const Octonion& Z = b.generic(2);
  CHECK(associator(X, X, Y).is_zero());
  CHECK(associator(Y, X, X).is_zero());
  CHECK(!associator(X, Y, Z).is_zero());
  CHECK((X * Y).norm() == X.norm() * Y.norm());
  for (const Octonion& c : {as_constant(X.trace()), as_constant(X.norm()), as_constant((X * Y).trace())}) {
    CHECK(commutator(c, Y).is_zero());
    CHECK(associator(c, Y, Z).is_zero());
    CHECK(associator(Y, c, Z).is_zero());
    CHECK(associator(Y, Z, c).is_zero());
  }
}

TEST_CASE("eval_split examples") {
  SplitBackend b;
  const auto xxy = b.eval(parse("assoc(x,x,y)", 3));
  CHECK(xxy.is_zero());
  const auto xyz = b.eval(parse("assoc(x,y,z)", 3));
  CHECK(xyz.assoc_part.empty());
  CHECK(!xyz.oct_part.is_zero());
  const auto c = b.eval(parse("comm(x,y)", 3));
  CHECK(c.assoc_part.size() == 2);
  CHECK(c.oct_part == commutator(b.generic(0), b.generic(1)));
  CHECK(b.is_zero(parse_identity("assoc(r*x,s,x) - x*assoc(r,s,x)").poly));
  CHECK_THROWS_WITH_AS(b.eval(parse("x1*x4", 4)), "split representation valid only for rank <= 3", Error);
  CHECK_THROWS_AS(split_rank_modular({1, 1, 1, 1}, 1), Error);
}

TEST_CASE("even/odd center identity") {
  SplitBackend b;
  const Octonion& X = b.generic(0);
  const Octonion& Y = b.generic(1);
  const Octonion& Z = b.generic(2);
  CHECK(even_odd_center_identity(as_constant(X.trace()), as_constant((X * (Y * Z)).trace())).is_zero());
  CHECK(even_odd_center_identity(as_constant(X.norm()), Octonion{}).is_zero());
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    std::uniform_int_distribution<long> d(-4, 4);
    const Poly z0 = Poly(Rational(d(rng))) * X.trace() + Poly(Rational(d(rng))) * Y.norm();
    const Poly z1 = Poly(Rational(d(rng))) * (X * Y).trace() * Z.trace() + Poly(Rational(d(rng)));
    CHECK(even_odd_center_identity(as_constant(z0), as_constant(z1)).is_zero());
  }
}

TEST_CASE("split zero test agrees with the engine on random elements") {
  std::mt19937_64 rng(8);
  RelativelyFreeAlgebra alg(IdentitySet::alternative(), 3);
  SplitBackend b;
  for (const auto& m : std::vector<MultiDegree>{{1, 1, 1}, {2, 1, 1}, {1, 1, 2}, {2, 2, 0}}) {
    const auto rows = alg.echelon_basis(m);
    for (const auto& r : rows) CHECK(b.is_zero(r));
    const auto& standard = alg.component(m).standard();
    for (int trial = 0; trial < 5; ++trial) {
      FreePoly p;
      for (const auto& t : standard) p.add_term(t, Rational(std::uniform_int_distribution<long>(-3, 3)(rng)));
      CHECK(b.is_zero(p) == p.is_zero());
    }
  }
}

TEST_CASE("exact and modular split ranks match the engine in low degree") {
  RelativelyFreeAlgebra alg(IdentitySet::alternative(), 3);
  for (std::size_t d = 1; d <= 4; ++d)
    for (const auto& m : multidegrees_of_total(3, d)) {
      INFO(m.to_string());
      if (d <= 3) CHECK(split_rank_exact(m) == alg.quotient_dim(m));
      CHECK(split_rank_modular(m, 17 + d) == alg.quotient_dim(m));
    }
  CHECK(split_rank_exact({1, 1, 1}) == 7);
}
