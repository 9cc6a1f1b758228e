#pragma once

// Plain-text polynomial syntax, h spelled "h":
//
//   1-h    2+3h^2    1/2*h    (1-h)*(x3*x2*x1 - x1*x3*x2)    x1^2 - h x2
//
// Juxtaposition multiplies. Products of x letters keep their order; h and
// numbers are central.

#include <string_view>

#include "pbw/freealg.hpp"

namespace pbw {

/// Throws Parse with the column of the offending character.
HPoly parse_hpoly(std::string_view text);

/// Letters x1..xn (or x_1..); BadIndex for a letter outside the range.
NCPoly<HPoly> parse_ncpoly(std::string_view text, int n);

}  // namespace pbw
