#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "veronalt/rational.hpp"

namespace veronalt {

// Commutative polynomial over Q in a fixed pool of indeterminates t0..t23.
//
// A monomial is a packed exponent vector, 5 bits per indeterminate, so every
// exponent must stay below 32. Terms are kept sorted by packed exponent.
class Poly {
 public:
  static constexpr std::size_t kVariables = 24;
  static constexpr unsigned kBits = 5;
  using Exponent = unsigned __int128;
  using Term = std::pair<Exponent, Rational>;

  Poly() = default;
  Poly(long c) {  // NOLINT(google-explicit-constructor): scalars embed as constants
    if (c != 0) terms_.emplace_back(Exponent{0}, Rational(c));
  }
  explicit Poly(const Rational& c) {
    if (c != 0) terms_.emplace_back(Exponent{0}, c);
  }
  static Poly variable(std::size_t i);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t degree() const;
  static std::size_t degree_of(Exponent e);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string to_string() const;

  // Sum of signed products, accumulated without intermediate sorting.
  class Accumulator {
   public:
    void add_product(const Poly& a, const Poly& b, int sign);
    Poly take();

   private:
    struct Hash {
      std::size_t operator()(Exponent e) const {
        const auto lo = static_cast<std::uint64_t>(e);
        const auto hi = static_cast<std::uint64_t>(e >> 64);
        return std::hash<std::uint64_t>()(lo * 0x9E3779B97F4A7C15ull ^ hi);
      }
    };
    std::unordered_map<Exponent, Rational, Hash> acc_;
    Rational tmp_;
  };

 private:
  static void check_product(Exponent a, Exponent b);
  std::vector<Term> terms_;
};

}  // namespace veronalt
