#pragma once

#include <cstddef>
#include <string_view>

#include "bezout/multipoly.hpp"

namespace bezout {

/// Highest variable index mentioned as z<k> in the text (a bare z counts as
/// z1); 0 when the text mentions no variable. Purely lexical, so it can run
/// before the ambient variable count is settled.
std::size_t scan_variable_count(std::string_view text);

/// Parses "(1-2i) z1^2 z2 + 3" style polynomial syntax into n variables.
///
/// Terms are separated by + and -. Factors multiply by juxtaposition or '*';
/// '/' divides by a nonzero constant factor; '^' raises to a non-negative
/// integer power; 'i' is the imaginary unit; a bare 'z' means z1. Rational
/// literals look like 3, 3/7 or 2i. Throws parse_error naming the offending
/// column.
MultiPoly parse_poly(std::string_view text, std::size_t n);

}  // namespace bezout
