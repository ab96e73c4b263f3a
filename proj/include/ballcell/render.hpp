#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ballcell/rational_function.hpp"

namespace ballcell {

// Plain-text rendering: terms in decreasing lexicographic order (x before n),
// explicit signs, '*' between factors, e.g. "(-n*x + x)/(x - n)".
// The output is accepted back by ParseRatFunc2 / ParseRatFunc1.
std::string ToText(const Rational& q);
std::string ToText(const Poly1& p, std::string_view var = "x");
std::string ToText(const Poly2& p);
std::string ToText(const RatFunc1& f, std::string_view var = "x");
std::string ToText(const RatFunc2& f);

// LaTeX rendering: graded term order (total degree, then powers of n), the
// usual layout of printed closed forms.
std::string ToLatex(const Rational& q);
std::string ToLatex(const Poly1& p, std::string_view var = "x");
std::string ToLatex(const Poly2& p);
std::string ToLatex(const RatFunc1& f, std::string_view var = "x");
std::string ToLatex(const RatFunc2& f);

/// LaTeX with the denominator written as a product of the given factors and
/// the numerator as constant * x^k * (rest). Falls back to ToLatex(f) when the
/// product of the factors is not a constant multiple of f's denominator.
std::string ToLatexFactored(const RatFunc1& f, const std::vector<Poly1>& factors);
std::string ToLatexFactored(const RatFunc2& f, const std::vector<Poly2>& factors);

}  // namespace ballcell
