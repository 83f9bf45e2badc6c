#pragma once

#include <string>
#include <vector>

#include "mahler/polynomial.hpp"

namespace mahler {

// Expression grammar: integer/rational literals, `z`, and + - * ^ ( ), with ^
// binding tighter than * tighter than +/-. Whitespace between tokens is
// ignored. Errors carry the byte offset of the offending character.
Polynomial parse_polynomial(const std::string& text);

// Same grammar extended with the tokens f0, f1, ... standing for the unknown
// series at the successive radix powers. The expression must be linear in the
// f tokens with no constant part left over; the result lists the polynomial
// coefficient of each f_i for i = 0..max index used.
std::vector<Polynomial> parse_equation_expr(const std::string& text);

}  // namespace mahler
