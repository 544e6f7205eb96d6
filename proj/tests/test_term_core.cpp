#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "veronalt/error.hpp"
#include "veronalt/free_poly.hpp"
#include "veronalt/monomial.hpp"
#include "veronalt/term_parser.hpp"

using namespace veronalt;
using veronalt::testing::random_monomial;
using veronalt::testing::random_poly;

namespace {

FreePoly gen(std::size_t i) { return FreePoly::generator(i); }
FreePoly P(const char* s, std::size_t rank = 3) { return parse(s, rank); }

// Independent count: all binary trees with the given leaf word, built recursively.
std::size_t brute_count(const MultiDegree& m) {
  std::vector<std::vector<std::uint8_t>> words;
  std::vector<std::uint8_t> w;
  for (std::size_t g = 0; g < m.rank(); ++g) w.insert(w.end(), m[g], static_cast<std::uint8_t>(g));
  do words.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  std::vector<std::size_t> trees(m.total() + 1, 0);
  trees[1] = 1;
  for (std::size_t n = 2; n <= m.total(); ++n)
    for (std::size_t l = 1; l < n; ++l) trees[n] += trees[l] * trees[n - l];
  return words.size() * trees[m.total()];
}

}  // namespace

TEST_CASE("enumerate_monomials small cases") {
  auto xy = enumerate_monomials({1, 1});
  REQUIRE(xy.size() == 2);
  CHECK(format(FreePoly::monomial(xy[0])) == "x*y");
  CHECK(format(FreePoly::monomial(xy[1])) == "y*x");
  CHECK(enumerate_monomials({2, 1}).size() == 6);
  CHECK(enumerate_monomials({1, 1, 1}).size() == 12);
  CHECK_THROWS_WITH_AS(enumerate_monomials(MultiDegree(2)), "empty multidegree", Error);
}

TEST_CASE("monomial count is Catalan times multinomial") {
  for (std::size_t rank = 1; rank <= 3; ++rank)
    for (std::size_t d = 1; d <= (rank == 3 ? 5u : 6u); ++d)
      for (const auto& m : multidegrees_of_total(rank, d)) {
        const auto all = enumerate_monomials(m);
        CHECK(all.size() == catalan(d - 1) * multinomial(m));
        CHECK(all.size() == brute_count(m));
        // Strictly increasing in the canonical order, all with multidegree m.
        for (std::size_t i = 0; i < all.size(); ++i) {
          CHECK(all[i].multidegree(rank) == m);
          if (i) CHECK(all[i - 1] < all[i]);
        }
      }
}

TEST_CASE("enumeration is shape-major then word-lex") {
  const auto all = enumerate_monomials({2, 1});
  // Two shapes x(xx)-type first (right-normed rank 0), then (xx)x-type.
  for (std::size_t i = 0; i < 3; ++i) CHECK(all[i].shape_rank() == 0);
  for (std::size_t i = 3; i < 6; ++i) CHECK(all[i].shape_rank() == 1);
  CHECK(all[0].word() < all[1].word());
  CHECK(all[1].word() < all[2].word());
  CHECK(enumerate_monomials({2, 1}) == all);
}

TEST_CASE("multiply examples") {
  CHECK((gen(0) + gen(1)) * gen(0) == P("x*x + y*x"));
  CHECK(FreePoly{} * P("x*y - y") == FreePoly{});
  const FreePoly xy = P("x*y");
  const FreePoly sq = xy * xy;
  REQUIRE(sq.size() == 1);
  CHECK(sq.terms().begin()->first.degree() == 4);
  CHECK(sq.terms().begin()->second == 1);
  CHECK(sq == P("(x*y)*(x*y)"));
}

TEST_CASE("substitute examples") {
  {
    std::vector<FreePoly> s{gen(0), gen(0)};
    CHECK(substitute(P("x*y - y*x"), s).is_zero());
  }
  {
    std::vector<FreePoly> s{gen(0), P("z*z")};
    CHECK(substitute(associator(gen(0), gen(0), gen(1)), s) == P("(x*x)*(z*z) - x*(x*(z*z))"));
  }
  {
    std::vector<FreePoly> s{gen(0) + gen(1)};
    CHECK(substitute(gen(0), s) == P("x + y"));
  }
  std::vector<FreePoly> short_map{gen(0)};
  CHECK_THROWS_AS(substitute(P("x*y"), short_map), Error);
}

TEST_CASE("associator, commutator, circ") {
  CHECK(associator(gen(0), gen(0), gen(1)) == P("(x*x)*y - x*(x*y)"));
  CHECK(commutator(gen(0), gen(0)).is_zero());
  CHECK(circ(gen(0), gen(1)) == P("x*y + y*x"));
}

TEST_CASE("parse builtins and associativity of *") {
  CHECK(P("(x*y)*z - x*(y*z)") == associator(gen(0), gen(1), gen(2)));
  CHECK(P("assoc(x,x,y)") == associator(gen(0), gen(0), gen(1)));
  CHECK(P("x*y*z") == P("(x*y)*z"));
  const FreePoly c = commutator(gen(0), gen(1));
  const FreePoly c4 = ((c * c) * c) * c;
  CHECK(P("lpow(comm(x,y),4)") == c4);
  CHECK(c4.max_degree() == 8);
  CHECK(P("3/2 x*y - 3/2*y*x") == Rational(3, 2) * c);
  CHECK(P("x1*x2", 2) == P("x*y", 2));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse("x*(y", 2), ParseError);
  try {
    parse("x + * y", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse("w*x", 2), Error);
  CHECK_THROWS_AS(parse("z", 2), Error);
  CHECK_THROWS_AS(parse("lpow(x,0)", 2), Error);
  CHECK_THROWS_AS(parse("2", 2), Error);
}

TEST_CASE("parse_identity numbers variables by first appearance") {
  const auto p = parse_identity("assoc(r*x,s,x) - x*assoc(r,s,x)");
  CHECK(p.variables == std::vector<std::string>{"r", "x", "s"});
  CHECK(p.poly.required_rank() == 3);
}

TEST_CASE("format/parse round trip on random polynomials") {
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rank = 1 + trial % 4;
    const FreePoly p = random_poly(rng, 1 + trial % 7, 6, rank);
    const std::string text = format(p);
    CHECK_MESSAGE(parse(text, rank) == p, text);
  }
  CHECK(format(FreePoly{}) == "0");
  CHECK(parse("0", 2).is_zero());
}

TEST_CASE("substitution is multiplicative and multiply is bilinear") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const FreePoly p = random_poly(rng, 3, 3, 3, 50), q = random_poly(rng, 3, 3, 3, 50);
    const FreePoly r = random_poly(rng, 2, 3, 3, 50);
    std::vector<FreePoly> s{random_poly(rng, 2, 2, 2, 9), random_poly(rng, 2, 2, 2, 9), random_poly(rng, 1, 2, 2, 9)};
    CHECK(substitute(p * q, s) == substitute(p, s) * substitute(q, s));
    CHECK((p + r) * q == p * q + r * q);
    CHECK(p * (Rational(3, 7) * q) == Rational(3, 7) * (p * q));
  }
}

TEST_CASE("homogeneous components of a product") {
  const FreePoly p = P("x*y + x") * P("z");
  const auto parts = p.homogeneous_components(3);
  REQUIRE(parts.size() == 2);
  CHECK(parts.at({1, 1, 1}) == P("(x*y)*z"));
  CHECK(parts.at({1, 0, 1}) == P("x*z"));
}

TEST_CASE("Teichmuller identity examples") {
  CHECK(teichmuller_check(gen(0), gen(1), gen(2), gen(0)).is_zero());
  CHECK(teichmuller_check(gen(0), gen(0), gen(0), gen(0)).is_zero());
  CHECK(teichmuller_check(P("x*y"), gen(2), gen(0), gen(1)).is_zero());
}

TEST_CASE("Teichmuller identity on random monomials") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    FreePoly args[4];
    for (auto& a : args)
      a = FreePoly::monomial(random_monomial(rng, std::uniform_int_distribution<std::size_t>(1, 2)(rng), 3));
    CHECK(teichmuller_check(args[0], args[1], args[2], args[3]).is_zero());
  }
}

TEST_CASE("monomial structure") {
  const Monomial t = Monomial::product(Monomial::product(Monomial::leaf(0), Monomial::leaf(1)), Monomial::leaf(0));
  CHECK(t.degree() == 3);
  CHECK(t.multidegree(2) == MultiDegree{2, 1});
  auto [l, r] = t.split();
  CHECK(l.degree() == 2);
  CHECK(r == Monomial::leaf(0));
  CHECK(t.word() == std::vector<std::uint8_t>{0, 1, 0});
  std::set<Monomial> distinct;
  for (const auto& m : enumerate_monomials({2, 2})) distinct.insert(m);
  CHECK(distinct.size() == 5 * 6);
}
