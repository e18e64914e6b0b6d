// Text grammar for polynomials:
//
//   expr   := ['-'|'+'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := atom ['^' integer]
//   atom   := integer | integer '/' integer | name | '(' expr ')'
//
// A name is a letter followed by letters, digits or '_'. Juxtaposition
// multiplies, so "8x^4" and "8*x^4" agree; "xy" is the single name xy.
#pragma once

#include "severi/poly/multipoly.hpp"
#include "severi/poly/unipoly.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace severi {

/// Polynomial with rational coefficients as produced by the parser.
struct ParsedPoly {
  std::vector<std::string> vars;
  std::map<Exponents, Rational> terms;  // no zero coefficients

  /// Throws std::invalid_argument if a coefficient is not an integer.
  MultiPoly to_multi() const;
  /// Throws std::invalid_argument if more than one variable occurs. A
  /// constant gets the variable `fallback`.
  UniPoly<Rational> to_uni(const std::string& fallback = "x") const;
};

/// Throws std::invalid_argument with the offending position on bad input.
ParsedPoly parse_poly(std::string_view text);

}  // namespace severi
