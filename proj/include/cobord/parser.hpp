#pragma once

#include "cobord/poly.hpp"

namespace cobord {

// Parse a polynomial expression over the space's variables:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | VAR | factor '^' INT | '(' expr ')'
//
// Exponents are plain nonnegative integer literals (a parenthesized
// exponent is a syntax error).  Errors carry the byte offset.
Poly parse_poly(const std::string& text, const PolySpace& space);

} // namespace cobord
