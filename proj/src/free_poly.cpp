#include "veronalt/free_poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "veronalt/error.hpp"

namespace veronalt {

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || (!den.empty() && (den.front() == '-' || den.front() == '+')))
    throw Error("malformed rational '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

FreePoly FreePoly::generator(std::size_t g) { return monomial(Monomial::leaf(g)); }

FreePoly FreePoly::monomial(const Monomial& m, const Rational& c) {
  FreePoly p;
  p.add_term(m, c);
  return p;
}

void FreePoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FreePoly& FreePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
  FreePoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(Monomial::product(ma, mb), ca * cb);
  return r;
}

std::size_t FreePoly::required_rank() const {
  std::size_t r = 0;
  for (const auto& [m, c] : terms_) r = std::max(r, m.max_generator() + 1);
  return r;
}

std::size_t FreePoly::max_degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::map<MultiDegree, FreePoly> FreePoly::homogeneous_components(std::size_t rank) const {
  std::map<MultiDegree, FreePoly> out;
  for (const auto& [m, c] : terms_) out[m.multidegree(rank)].terms_.emplace(m, c);
  return out;
}

FreePoly associator(const FreePoly& a, const FreePoly& b, const FreePoly& c) {
  return (a * b) * c - a * (b * c);
}

FreePoly commutator(const FreePoly& a, const FreePoly& b) { return a * b - b * a; }

FreePoly circ(const FreePoly& a, const FreePoly& b) { return a * b + b * a; }

FreePoly left_power(const FreePoly& a, std::size_t n) {
  if (n == 0) throw Error("lpow exponent must be at least 1");
  FreePoly r = a;
  for (std::size_t k = 1; k < n; ++k) r = r * a;
  return r;
}

FreePoly substitute(const FreePoly& p, std::span<const FreePoly> images) {
  std::unordered_map<Monomial, FreePoly, MonomialHash> memo;
  auto image = [&](auto&& self, const Monomial& m) -> const FreePoly& {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    FreePoly r;
    if (m.is_leaf()) {
      if (m.generator() >= images.size())
        throw Error("substitution has no image for generator " + std::to_string(m.generator()));
      r = images[m.generator()];
    } else {
      auto [l, rt] = m.split();
      r = self(self, l) * self(self, rt);
    }
    return memo.emplace(m, std::move(r)).first->second;
  };
  FreePoly out;
  for (const auto& [m, c] : p.terms()) out += c * image(image, m);
  return out;
}

FreePoly teichmuller_check(const FreePoly& m, const FreePoly& a, const FreePoly& b, const FreePoly& c) {
  return m * associator(a, b, c) - associator(m * a, b, c) - associator(m, a, b * c) +
         associator(m, a * b, c) + associator(m, a, b) * c;
}

std::vector<std::string> generator_names(std::size_t rank) {
  std::vector<std::string> names;
  if (rank <= 3) {
    for (std::size_t i = 0; i < 3; ++i) names.emplace_back(1, static_cast<char>('x' + i));
  } else {
    for (std::size_t i = 0; i < rank; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

std::string format(const FreePoly& p) { return format(p, generator_names(p.required_rank())); }

std::string format(const FreePoly& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational mag = abs(c);
    if (mag != 1) out += mag.get_str() + " ";
    out += format_monomial(m, names);
    first = false;
  }
  return out;
}

}  // namespace veronalt
