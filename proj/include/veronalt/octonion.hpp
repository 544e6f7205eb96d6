#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "veronalt/polynomial.hpp"
#include "veronalt/rational.hpp"

namespace veronalt {

// Split octonions in Zorn vector-matrix form. Coordinates:
//   0: a,  1-3: u,  4-6: v,  7: b      for the matrix [[a, u], [v, b]]
// with product
//   (a,u,v,b)(a',u',v',b') = (aa' + u.v',  a u' + b' u - v x v',
//                             a' v + b v' + u x u',  bb' + v.u').
// Conjugation is (b,-u,-v,a), trace a+b, norm ab - u.v; the unit is (1,0,0,1).
struct StructureConstant {
  std::uint8_t left;
  std::uint8_t right;
  std::uint8_t target;
  std::int8_t sign;
};

// The nonzero products e_left * e_right = sign * e_target of basis vectors.
const std::vector<StructureConstant>& zorn_structure_constants();

template <class S>
struct ProductAccumulator {
  S sum{};
  void add_product(const S& a, const S& b, int sign) {
    if (sign > 0)
      sum += a * b;
    else
      sum -= a * b;
  }
  S take() { return sum; }
};

template <>
struct ProductAccumulator<Poly> {
  Poly::Accumulator acc;
  void add_product(const Poly& a, const Poly& b, int sign) { acc.add_product(a, b, sign); }
  Poly take() { return acc.take(); }
};

template <class S>
class BasicOctonion {
 public:
  BasicOctonion() : c_{} {}
  explicit BasicOctonion(std::array<S, 8> coords) : c_(std::move(coords)) {}

  static BasicOctonion unit() { return scalar(S(1)); }
  static BasicOctonion scalar(const S& s) {
    BasicOctonion o;
    o.c_[0] = s;
    o.c_[7] = s;
    return o;
  }

  const S& operator[](std::size_t i) const { return c_[i]; }
  S& operator[](std::size_t i) { return c_[i]; }
  const std::array<S, 8>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!(x == S(0))) return false;
    return true;
  }

  BasicOctonion& operator+=(const BasicOctonion& o) {
    for (std::size_t i = 0; i < 8; ++i) c_[i] += o.c_[i];
    return *this;
  }
  BasicOctonion& operator-=(const BasicOctonion& o) {
    for (std::size_t i = 0; i < 8; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend BasicOctonion operator+(BasicOctonion a, const BasicOctonion& b) { return a += b; }
  friend BasicOctonion operator-(BasicOctonion a, const BasicOctonion& b) { return a -= b; }
  friend bool operator==(const BasicOctonion& a, const BasicOctonion& b) { return a.c_ == b.c_; }

  // Scalar coefficient (from the coefficient ring, not the coordinate ring).
  template <class K>
  friend BasicOctonion scale(const K& k, BasicOctonion a) {
    for (auto& x : a.c_) x = k * x;
    return a;
  }

  friend BasicOctonion operator*(const BasicOctonion& x, const BasicOctonion& y) {
    std::array<ProductAccumulator<S>, 8> acc;
    for (const auto& sc : zorn_structure_constants()) acc[sc.target].add_product(x.c_[sc.left], y.c_[sc.right], sc.sign);
    BasicOctonion out;
    for (std::size_t k = 0; k < 8; ++k) out.c_[k] = acc[k].take();
    return out;
  }

  BasicOctonion conjugate() const {
    BasicOctonion o;
    o.c_[0] = c_[7];
    o.c_[7] = c_[0];
    for (std::size_t i = 1; i < 7; ++i) o.c_[i] = S(0) - c_[i];
    return o;
  }
  S trace() const { return c_[0] + c_[7]; }
  S norm() const {
    S n = c_[0] * c_[7];
    for (std::size_t i = 0; i < 3; ++i) n -= c_[1 + i] * c_[4 + i];
    return n;
  }

 private:
  std::array<S, 8> c_;
};

template <class S>
BasicOctonion<S> associator(const BasicOctonion<S>& a, const BasicOctonion<S>& b, const BasicOctonion<S>& c) {
  return (a * b) * c - a * (b * c);
}

template <class S>
BasicOctonion<S> commutator(const BasicOctonion<S>& a, const BasicOctonion<S>& b) {
  return a * b - b * a;
}

using Octonion = BasicOctonion<Poly>;
using RationalOctonion = BasicOctonion<Rational>;

// The generic octonion whose coordinates are the indeterminates t[8g] .. t[8g+7].
Octonion generic_octonion(std::size_t g);

}  // namespace veronalt
