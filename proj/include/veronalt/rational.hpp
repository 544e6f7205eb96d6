#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace veronalt {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p", "-p", "p/q"; throws veronalt::Error on malformed input or q = 0.
Rational parse_rational(std::string_view text);

}  // namespace veronalt
