#include "veronalt/term_parser.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "veronalt/error.hpp"

namespace veronalt {
namespace {

class Parser {
 public:
  using Resolver = std::function<std::size_t(const std::string&, std::size_t pos)>;

  Parser(std::string_view text, Resolver resolve) : text_(text), resolve_(std::move(resolve)) {}

  FreePoly parse_all() {
    skip();
    if (at_end()) fail("empty expression");
    FreePoly p = expr();
    skip();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("syntax error: " + what, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return !at_end() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool peek_digit() {
    skip();
    return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  bool peek_ident() {
    skip();
    return !at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }

  std::string integer_literal() {
    skip();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational rational() {
    std::string s = integer_literal();
    if (accept('/')) {
      const std::size_t at = pos_;
      std::string d = integer_literal();
      if (Integer(d) == 0) throw ParseError("zero denominator", at);
      s += "/" + d;
    }
    return parse_rational(s);
  }

  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  FreePoly expr() {
    FreePoly acc;
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    for (;;) {
      FreePoly t = term();
      if (negate)
        acc -= t;
      else
        acc += t;
      if (accept('+'))
        negate = false;
      else if (accept('-'))
        negate = true;
      else
        return acc;
    }
  }

  FreePoly term() {
    Rational coeff = 1;
    bool has_coeff = false;
    if (peek_digit()) {
      const std::size_t at = pos_;
      coeff = rational();
      has_coeff = true;
      accept('*');
      if (!peek_ident() && !peek('(')) {
        if (coeff == 0) return {};
        throw ParseError("syntax error: a bare scalar is not an algebra element", at);
      }
    }
    FreePoly p = factor();
    while (accept('*')) p = p * factor();
    if (has_coeff) p *= coeff;
    return p;
  }

  FreePoly factor() {
    if (accept('(')) {
      FreePoly p = expr();
      expect(')');
      return p;
    }
    if (!peek_ident()) fail(at_end() ? "unexpected end of input" : std::string("unexpected '") + text_[pos_] + "'");
    const std::size_t at = pos_;
    const std::string name = identifier();
    if (name == "assoc" || name == "comm" || name == "circ" || name == "lpow") {
      expect('(');
      FreePoly a = expr();
      if (name == "lpow") {
        expect(',');
        const std::size_t npos = pos_;
        const std::string n = integer_literal();
        expect(')');
        const unsigned long k = std::stoul(n);
        if (k == 0) throw ParseError("lpow exponent must be at least 1", npos);
        return left_power(a, k);
      }
      expect(',');
      FreePoly b = expr();
      if (name == "assoc") {
        expect(',');
        FreePoly c = expr();
        expect(')');
        return associator(a, b, c);
      }
      expect(')');
      return name == "comm" ? commutator(a, b) : circ(a, b);
    }
    return FreePoly::generator(resolve_(name, at));
  }

  std::string_view text_;
  Resolver resolve_;
  std::size_t pos_ = 0;
};

std::size_t standard_index(const std::string& name) {
  if (name.size() == 1 && name[0] >= 'x' && name[0] <= 'z') return static_cast<std::size_t>(name[0] - 'x');
  if (name.size() >= 2 && name[0] == 'x' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
      name[1] != '0')
    return std::stoul(name.substr(1)) - 1;
  return static_cast<std::size_t>(-1);
}

}  // namespace

FreePoly parse(std::string_view text, std::size_t rank) {
  Parser p(text, [rank](const std::string& name, std::size_t pos) {
    const std::size_t g = standard_index(name);
    if (g >= rank) throw ParseError("unknown generator name '" + name + "' for rank " + std::to_string(rank), pos);
    return g;
  });
  return p.parse_all();
}

ParsedIdentity parse_identity(std::string_view text) {
  ParsedIdentity out;
  Parser p(text, [&out](const std::string& name, std::size_t) {
    auto it = std::find(out.variables.begin(), out.variables.end(), name);
    if (it != out.variables.end()) return static_cast<std::size_t>(it - out.variables.begin());
    if (out.variables.size() >= Monomial::kMaxGenerators) throw Error("too many variables");
    out.variables.push_back(name);
    return out.variables.size() - 1;
  });
  out.poly = p.parse_all();
  return out;
}

}  // namespace veronalt
