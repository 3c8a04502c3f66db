#pragma once

#include <string_view>

#include "lzroot/poly.hpp"

namespace lzroot {

/// Parses an expression in x over integer, rational and decimal literals with
/// + - * / ^ and parentheses, or a coefficient list "c0,c1,...". Coefficients are
/// exact. Throws ParseError (with position) or UnsupportedExponent.
Poly parse_poly(std::string_view text);

/// Chebyshev polynomial of the first kind, T_0 = 1, T_1 = x, T_{n+1} = 2x T_n - T_{n-1}.
Poly chebyshev(int n);

}  // namespace lzroot
