#pragma once

#include <string>
#include <vector>

#include "hh/polynomial.hpp"

namespace hh {

// Parses ASCII polynomial text over the given ambient.
//
//   poly   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := primary ('^' uint)?
//   primary:= number | variable | '(' poly ')'
//   number := uint ('/' uint)?
//
// '*' between factors is optional, so "2z1" and "3 z2" work; identifiers are
// taken maximally, so "z1z2" is an unknown-variable error rather than a
// product. Throws ParseError with a byte position on malformed input.
Polynomial parse_polynomial(const std::string& text, const Vars& vars);

// Splits on `sep` (default ';') and parses each piece; empty pieces rejected.
std::vector<Polynomial> parse_polynomial_list(const std::string& text, const Vars& vars,
                                              char sep = ';');

}  // namespace hh
