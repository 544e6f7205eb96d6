#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "veronalt/monomial.hpp"
#include "veronalt/multidegree.hpp"
#include "veronalt/rational.hpp"

namespace veronalt {

// A finite rational combination of tree monomials. Zero coefficients are never stored.
class FreePoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  FreePoly() = default;
  static FreePoly generator(std::size_t g);
  static FreePoly monomial(const Monomial& m, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);

  FreePoly& operator+=(const FreePoly& o);
  FreePoly& operator-=(const FreePoly& o);
  FreePoly& operator*=(const Rational& c);

  friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
  friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
  friend FreePoly operator-(FreePoly a) { return a *= Rational(-1); }
  friend FreePoly operator*(const Rational& c, FreePoly a) { return a *= c; }
  friend FreePoly operator*(const FreePoly& a, const FreePoly& b);
  friend bool operator==(const FreePoly& a, const FreePoly& b) = default;

  // One more than the largest generator index occurring; 0 for the zero polynomial.
  std::size_t required_rank() const;
  std::size_t max_degree() const;
  std::map<MultiDegree, FreePoly> homogeneous_components(std::size_t rank) const;

 private:
  Terms terms_;
};

FreePoly associator(const FreePoly& a, const FreePoly& b, const FreePoly& c);
FreePoly commutator(const FreePoly& a, const FreePoly& b);
FreePoly circ(const FreePoly& a, const FreePoly& b);
// ((a*a)*a)*...*a with n factors; n >= 1.
FreePoly left_power(const FreePoly& a, std::size_t n);

// images[g] is the image of generator g. Throws if p uses a generator with no image.
FreePoly substitute(const FreePoly& p, std::span<const FreePoly> images);

// m(a,b,c) - (ma,b,c) - (m,a,bc) + (m,ab,c) + (m,a,b)c. Vanishes in every algebra.
FreePoly teichmuller_check(const FreePoly& m, const FreePoly& a, const FreePoly& b, const FreePoly& c);

// x, y, z for rank <= 3, otherwise x1..xk.
std::vector<std::string> generator_names(std::size_t rank);

// Canonical text: terms in canonical monomial order, coefficients as p/q.
std::string format(const FreePoly& p);
std::string format(const FreePoly& p, std::span<const std::string> names);

}  // namespace veronalt
