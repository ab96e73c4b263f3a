#pragma once

#include "json.hpp"

#include "ballcell/rational_function.hpp"

namespace ballcell {

// Wire schema:
//   Rational  -> "p/q" (or "p" when q = 1)
//   Poly1     -> [[exponent, "p/q"], ...]            ascending exponent
//   Poly2     -> [[[deg_n, deg_x], "p/q"], ...]      ascending (deg_x, deg_n)
//   RatFunc   -> {"num": <poly>, "den": <poly>}
nlohmann::json ToJson(const Rational& q);
nlohmann::json ToJson(const Poly1& p);
nlohmann::json ToJson(const Poly2& p);
nlohmann::json ToJson(const RatFunc1& f);
nlohmann::json ToJson(const RatFunc2& f);

Rational RationalFromJson(const nlohmann::json& j);
Poly1 Poly1FromJson(const nlohmann::json& j);
Poly2 Poly2FromJson(const nlohmann::json& j);
RatFunc1 RatFunc1FromJson(const nlohmann::json& j);
RatFunc2 RatFunc2FromJson(const nlohmann::json& j);

}  // namespace ballcell
