#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "veronalt/free_poly.hpp"

namespace veronalt {

// Term language:
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := (rational '*'?)? factor ('*' factor)*  |  '0'
//   factor := ident | '(' expr ')' | builtin '(' args ')'
// Builtins: assoc(a,b,c), comm(a,b), circ(a,b), lpow(a,n). `*` is left-associative,
// so x*y*z means (x*y)*z.

// Generators are named x, y, z (indices 0..2) or x1..xk (indices 0..k-1), all below `rank`.
FreePoly parse(std::string_view text, std::size_t rank);

// Identity text with free variable names; variables are numbered by first appearance.
struct ParsedIdentity {
  FreePoly poly;
  std::vector<std::string> variables;
};
ParsedIdentity parse_identity(std::string_view text);

}  // namespace veronalt
