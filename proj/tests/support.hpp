#pragma once

#include <random>

#include "veronalt/free_poly.hpp"
#include "veronalt/monomial.hpp"

namespace veronalt::testing {

// Uniform leaf labels, random split points.
inline Monomial random_monomial(std::mt19937_64& rng, std::size_t degree, std::size_t rank) {
  if (degree == 1) return Monomial::leaf(std::uniform_int_distribution<std::size_t>(0, rank - 1)(rng));
  const std::size_t left = std::uniform_int_distribution<std::size_t>(1, degree - 1)(rng);
  return Monomial::product(random_monomial(rng, left, rank), random_monomial(rng, degree - left, rank));
}

inline Rational random_rational(std::mt19937_64& rng, long max_den) {
  const long num = std::uniform_int_distribution<long>(-1000000, 1000000)(rng);
  const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

inline FreePoly random_poly(std::mt19937_64& rng, std::size_t terms, std::size_t max_degree, std::size_t rank,
                            long max_den = 1000000) {
  FreePoly p;
  for (std::size_t i = 0; i < terms; ++i) {
    const std::size_t d = std::uniform_int_distribution<std::size_t>(1, max_degree)(rng);
    const Rational c = random_rational(rng, max_den);
    p.add_term(random_monomial(rng, d, rank), c);
  }
  return p;
}

// Random element of one multidegree: combination of random rearrangements.
inline FreePoly random_homogeneous(std::mt19937_64& rng, const MultiDegree& m, std::size_t terms) {
  const auto all = enumerate_monomials(m);
  FreePoly p;
  for (std::size_t i = 0; i < terms; ++i)
    p.add_term(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)],
               Rational(std::uniform_int_distribution<long>(-9, 9)(rng)));
  return p;
}

}  // namespace veronalt::testing
