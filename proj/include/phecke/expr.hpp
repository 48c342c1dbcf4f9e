#pragma once

#include <string>

#include "phecke/coset.hpp"
#include "phecke/hecke.hpp"
#include "phecke/polyq.hpp"

namespace phecke {

// Shared element grammar:
//   element := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := INT | 'q' ['^' n] | '(' poly ')' | atom
//   atom    := 'V'['^'n] | 'X'['^'n] | 'Y1'['^'n] | 'Y2'['^'n]
//            | 'T' '(' a ',' b ',' c ')' | 'W'
// Mixed coset/monomial atoms are allowed; the product is taken in the
// algebra, so the result is an element in the monomial basis.  Exponents
// must be nonnegative.  Throws ParseError with position information.
HeckeElement parse_element(const std::string& text, CosetEngine& engine);

// Z[q] expressions built from integers, q, ^, *, +, -, parentheses.
PolyQ parse_polyq(const std::string& text);

// Canonical renderings; parse(print(e)) == e and the output is
// byte-deterministic.  Coefficients print ascending in q, parenthesized
// when they have more than one term; unit coefficients and exponent 1 are
// omitted.
std::string print_element(const HeckeElement& h);
std::string print_coset(const CosetElement& e);

}  // namespace phecke
