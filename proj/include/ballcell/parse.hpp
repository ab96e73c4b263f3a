#pragma once

#include <string_view>

#include "ballcell/rational_function.hpp"

namespace ballcell {

/// Parses an arithmetic expression in the variables n and x: integers,
/// + - * / ^ (nonnegative integer exponents), parentheses, and implicit
/// multiplication ("2x(5x+3)"). Throws Error(kParse) on malformed input.
RatFunc2 ParseRatFunc2(std::string_view text);

/// As ParseRatFunc2, for an expression in the single variable `var`
/// ('x' or 'n'); the other variable must not occur.
RatFunc1 ParseRatFunc1(std::string_view text, char var = 'x');

}  // namespace ballcell
