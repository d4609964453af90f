#ifndef MONIC_PARSE_HPP
#define MONIC_PARSE_HPP

#include "monic/poly.hpp"
#include "monic/rational.hpp"

#include <string_view>

namespace monic {

// Parses a polynomial expression over Q.
//
// Grammar (whitespace insignificant):
//   poly     := ['+'|'-'] term (('+'|'-') term)*
//   term     := rational '*' word | rational | word
//   word     := factor ('*' factor)*
//   factor   := name ['^' integer]
//   rational := integer ['/' integer]
//   name     := [A-Za-z][A-Za-z0-9_]*
//
// Caret powers are sugar for repeated letters. Errors carry line/column.
Poly<Rational> parse_poly(std::string_view text, const ContextPtr& ctx);

}  // namespace monic

#endif
