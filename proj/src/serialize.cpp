#include "ballcell/serialize.hpp"

#include <map>

namespace ballcell {

using nlohmann::json;

json ToJson(const Rational& q) { return q.str(); }

json ToJson(const Poly1& p) {
  json out = json::array();
  for (int d = 0; d <= p.degree(); ++d) {
    if (!p.coeff(d).isZero()) out.push_back(json::array({d, p.coeff(d).str()}));
  }
  return out;
}

json ToJson(const Poly2& p) {
  json out = json::array();
  for (int dx = 0; dx <= p.degree(); ++dx) {
    const Poly1& c = p.coeff(dx);
    for (int dn = 0; dn <= c.degree(); ++dn) {
      if (!c.coeff(dn).isZero()) {
        out.push_back(json::array({json::array({dn, dx}), c.coeff(dn).str()}));
      }
    }
  }
  return out;
}

json ToJson(const RatFunc1& f) { return {{"num", ToJson(f.num())}, {"den", ToJson(f.den())}}; }
json ToJson(const RatFunc2& f) { return {{"num", ToJson(f.num())}, {"den", ToJson(f.den())}}; }

Rational RationalFromJson(const json& j) {
  Require(j.is_string(), ErrorKind::kParse, "rational must be a \"p/q\" string");
  return Rational::Parse(j.get<std::string>());
}

Poly1 Poly1FromJson(const json& j) {
  Require(j.is_array(), ErrorKind::kParse, "polynomial must be an array of terms");
  std::map<int, Rational> terms;
  for (const auto& t : j) {
    Require(t.is_array() && t.size() == 2 && t[0].is_number_integer(), ErrorKind::kParse,
            "term must be [exponent, \"p/q\"]");
    const int e = t[0].get<int>();
    Require(e >= 0, ErrorKind::kParse, "negative exponent");
    terms[e] += RationalFromJson(t[1]);
  }
  std::vector<Rational> coeffs(terms.empty() ? 0 : static_cast<std::size_t>(terms.rbegin()->first) + 1);
  for (const auto& [e, c] : terms) coeffs[static_cast<std::size_t>(e)] = c;
  return Poly1(std::move(coeffs));
}

Poly2 Poly2FromJson(const json& j) {
  Require(j.is_array(), ErrorKind::kParse, "polynomial must be an array of terms");
  Poly2 out;
  for (const auto& t : j) {
    Require(t.is_array() && t.size() == 2 && t[0].is_array() && t[0].size() == 2,
            ErrorKind::kParse, "term must be [[deg_n, deg_x], \"p/q\"]");
    const int dn = t[0][0].get<int>();
    const int dx = t[0][1].get<int>();
    Require(dn >= 0 && dx >= 0, ErrorKind::kParse, "negative exponent");
    out += Poly2::Monomial(Poly1::Monomial(RationalFromJson(t[1]), dn), dx);
  }
  return out;
}

RatFunc1 RatFunc1FromJson(const json& j) {
  Require(j.is_object() && j.contains("num") && j.contains("den"), ErrorKind::kParse,
          "rational function must be {\"num\": ..., \"den\": ...}");
  return RatFunc1(Poly1FromJson(j["num"]), Poly1FromJson(j["den"]));
}

RatFunc2 RatFunc2FromJson(const json& j) {
  Require(j.is_object() && j.contains("num") && j.contains("den"), ErrorKind::kParse,
          "rational function must be {\"num\": ..., \"den\": ...}");
  return RatFunc2(Poly2FromJson(j["num"]), Poly2FromJson(j["den"]));
}

}  // namespace ballcell
