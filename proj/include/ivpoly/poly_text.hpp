#ifndef IVPOLY_POLY_TEXT_HPP
#define IVPOLY_POLY_TEXT_HPP

#include <string>

#include "ivpoly/bpoly.hpp"
#include "ivpoly/mpoly.hpp"
#include "ivpoly/tbpoly.hpp"

namespace ivpoly {

// Text grammar shared by the CLI and test fixtures:
//   poly  := term (('+'|'-') term)*
//   term  := [coeff '*'] atom | coeff
//   coeff := int | int '/' int
//   atom  := 'C(X,' nat ')' | 'X' ['^' nat] | 'Y' ['^' nat] | 'C(Y,' nat ')'
//            | atom '*' atom
// Whitespace is insignificant.  Parsing yields a polynomial in X and Y;
// the coercions below reject unused-variable violations.
MPoly parse_poly_xy(const std::string& text);

BPoly parse_bpoly(const std::string& text);    // univariate in X
TBPoly parse_tbpoly(const std::string& text);  // bivariate

std::string to_text(const BPoly& f);   // on the binomial basis
std::string to_text(const MPoly& f);   // on the monomial basis
std::string to_text(const TBPoly& f);  // on the tensor binomial basis

}  // namespace ivpoly

#endif
