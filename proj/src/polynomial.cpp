#include "veronalt/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "veronalt/error.hpp"

namespace veronalt {
namespace {

constexpr unsigned __int128 kMask = 0x1F;

unsigned exponent_at(Poly::Exponent e, std::size_t i) {
  return static_cast<unsigned>((e >> (Poly::kBits * i)) & kMask);
}

template <class Op>
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, Op op) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, op(Rational(0), j->second));
      ++j;
    } else {
      Rational v = op(i->second, j->second);
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly Poly::variable(std::size_t i) {
  if (i >= kVariables) throw Error("indeterminate index out of range");
  Poly p;
  p.terms_.emplace_back(Exponent{1} << (kBits * i), Rational(1));
  return p;
}

std::size_t Poly::degree_of(Exponent e) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < kVariables; ++i) d += exponent_at(e, i);
  return d;
}

std::size_t Poly::degree() const {
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
  return d;
}

Poly& Poly::operator+=(const Poly& o) {
  terms_ = merge(terms_, o.terms_, [](const Rational& x, const Rational& y) { return Rational(x + y); });
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  terms_ = merge(terms_, o.terms_, [](const Rational& x, const Rational& y) { return Rational(x - y); });
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

void Poly::check_product(Exponent a, Exponent b) {
  for (std::size_t i = 0; i < kVariables; ++i)
    if (exponent_at(a, i) + exponent_at(b, i) > kMask) throw Error("polynomial exponent overflow (max 31)");
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly::Accumulator acc;
  acc.add_product(a, b, 1);
  return acc.take();
}

void Poly::Accumulator::add_product(const Poly& a, const Poly& b, int sign) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.degree() + b.degree() > kMask) {
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) check_product(ea, eb);
  }
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      mpq_mul(tmp_.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto& slot = acc_[ea + eb];
      if (sign > 0)
        slot += tmp_;
      else
        slot -= tmp_;
    }
  }
}

Poly Poly::Accumulator::take() {
  Poly p;
  p.terms_.reserve(acc_.size());
  for (auto& [e, c] : acc_)
    if (c != 0) p.terms_.emplace_back(e, std::move(c));
  acc_.clear();
  std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  return p;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    out << (first ? "" : " + ") << c.get_str();
    for (std::size_t i = 0; i < kVariables; ++i) {
      const unsigned k = exponent_at(e, i);
      if (k == 0) continue;
      out << "*t" << i;
      if (k > 1) out << '^' << k;
    }
    first = false;
  }
  return out.str();
}

}  // namespace veronalt
