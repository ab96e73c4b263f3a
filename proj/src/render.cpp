#include "ballcell/render.hpp"

#include <algorithm>
#include <tuple>

namespace ballcell {
namespace {

struct Term {
  Rational coeff;
  int degN = 0;
  int degX = 0;
};

enum class Order { kLexXFirst, kGraded };

std::vector<Term> Terms(const Poly2& p, Order order) {
  std::vector<Term> terms;
  for (int dx = 0; dx <= p.degree(); ++dx) {
    const Poly1& c = p.coeff(dx);
    for (int dn = 0; dn <= c.degree(); ++dn) {
      if (!c.coeff(dn).isZero()) terms.push_back({c.coeff(dn), dn, dx});
    }
  }
  std::sort(terms.begin(), terms.end(), [order](const Term& a, const Term& b) {
    if (order == Order::kLexXFirst) {
      return std::tie(a.degX, a.degN) > std::tie(b.degX, b.degN);
    }
    const int ta = a.degN + a.degX, tb = b.degN + b.degX;
    return std::tie(ta, a.degN) > std::tie(tb, b.degN);
  });
  return terms;
}

// Poly1 in `var` as Term list (degN holds the degree when var == "n").
std::vector<Term> Terms(const Poly1& p, std::string_view var) {
  std::vector<Term> terms;
  for (int d = p.degree(); d >= 0; --d) {
    if (p.coeff(d).isZero()) continue;
    if (var == "n") {
      terms.push_back({p.coeff(d), d, 0});
    } else {
      terms.push_back({p.coeff(d), 0, d});
    }
  }
  return terms;
}

std::string TextPower(std::string_view var, int degree) {
  std::string out(var);
  if (degree > 1) out += "^" + std::to_string(degree);
  return out;
}

std::string LatexPower(std::string_view var, int degree) {
  std::string out(var);
  if (degree > 1) out += "^{" + std::to_string(degree) + "}";
  return out;
}

std::string JoinText(const std::vector<Term>& terms, std::string_view varX) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms) {
    const Rational mag = t.coeff.abs();
    std::vector<std::string> parts;
    const bool hasVars = t.degN > 0 || t.degX > 0;
    if (!mag.isOne() || !hasVars) parts.push_back(mag.str());
    if (t.degN > 0) parts.push_back(TextPower("n", t.degN));
    if (t.degX > 0) parts.push_back(TextPower(varX, t.degX));
    std::string body;
    for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? "*" : "") + parts[i];
    if (first) {
      out = (t.coeff.sign() < 0 ? "-" : "") + body;
    } else {
      out += (t.coeff.sign() < 0 ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

std::string LatexRational(const Rational& q) {
  if (q.isInteger()) return q.num().get_str();
  const std::string sign = q.sign() < 0 ? "-" : "";
  return sign + "\\frac{" + mpz_class(abs(q.num())).get_str() + "}{" + q.den().get_str() + "}";
}

std::string JoinLatex(const std::vector<Term>& terms, std::string_view varX) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms) {
    const Rational mag = t.coeff.abs();
    std::vector<std::string> parts;
    const bool hasVars = t.degN > 0 || t.degX > 0;
    if (!mag.isOne() || !hasVars) parts.push_back(LatexRational(mag));
    if (t.degN > 0) parts.push_back(LatexPower("n", t.degN));
    if (t.degX > 0) parts.push_back(LatexPower(varX, t.degX));
    std::string body;
    for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? " " : "") + parts[i];
    if (first) {
      out = (t.coeff.sign() < 0 ? "-" : "") + body;
    } else {
      out += (t.coeff.sign() < 0 ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

// A lone integer or a bare variable needs no parentheses as a divisor.
bool IsAtom(const std::vector<Term>& terms) {
  if (terms.size() != 1) return false;
  const Term& t = terms.front();
  if (t.degN == 0 && t.degX == 0) return t.coeff.isInteger() && t.coeff.sign() > 0;
  return t.coeff.isOne() && t.degN + t.degX == 1;
}

std::string TextQuotient(const std::vector<Term>& num, const std::vector<Term>& den,
                         std::string_view varX) {
  const std::string n = JoinText(num, varX);
  if (den.size() == 1 && den.front().degN == 0 && den.front().degX == 0 &&
      den.front().coeff.isOne()) {
    return n;
  }
  const std::string d = JoinText(den, varX);
  return (num.size() > 1 ? "(" + n + ")" : n) + "/" + (IsAtom(den) ? d : "(" + d + ")");
}

std::string LatexQuotient(const std::string& num, const std::string& den, bool denIsOne) {
  if (denIsOne) return num;
  return "\\frac{" + num + "}{" + den + "}";
}

bool IsOne(const std::vector<Term>& terms) {
  return terms.size() == 1 && terms.front().degN == 0 && terms.front().degX == 0 &&
         terms.front().coeff.isOne();
}

Poly2 AsPoly2(const Poly1& p) {
  return p.mapCoefficients([](const Rational& c) { return Poly1(c); });
}

// Lowest power of x present in p.
int XValuation(const Poly2& p) {
  for (int d = 0; d <= p.degree(); ++d) {
    if (!p.coeff(d).isZero()) return d;
  }
  return 0;
}

std::string LatexFactoredImpl(const Poly2& num, const Poly2& den,
                              const std::vector<Poly2>& factors, Order order,
                              std::string_view varX, bool& ok) {
  ok = false;
  Poly2 product(Poly1(Rational(1)));
  for (const Poly2& f : factors) product *= f;
  auto lambda = TryDivideExact(product, den);
  if (!lambda || lambda->degree() != 0 || lambda->leading().degree() != 0) return {};
  ok = true;
  // num/den == (num * lambda) / product.
  const Poly2 scaledNum = num.scaled(lambda->leading().leading());
  std::string numText;
  if (scaledNum.isZero()) {
    numText = "0";
  } else {
    const Rational content = RationalContent(scaledNum) *
                             Rational(LeadingRational(scaledNum).sign());
    const int k = XValuation(scaledNum);
    Poly2 rest = scaledNum.scaled(content.inverse());
    if (k > 0) {
      std::vector<Poly1> shifted(rest.coeffs().begin() + k, rest.coeffs().end());
      rest = Poly2(std::move(shifted));
    }
    std::vector<std::string> parts;
    const bool restIsOne = rest.degree() == 0 && rest.leading() == Poly1(Rational(1));
    if (!content.abs().isOne() || (k == 0 && restIsOne)) parts.push_back(LatexRational(content.abs()));
    if (k > 0) parts.push_back(LatexPower(varX, k));
    if (!restIsOne) {
      const auto terms = Terms(rest, order);
      parts.push_back(terms.size() > 1 || !parts.empty()
                          ? "\\left(" + JoinLatex(terms, varX) + "\\right)"
                          : JoinLatex(terms, varX));
    }
    numText = content.sign() < 0 ? "-" : "";
    for (std::size_t i = 0; i < parts.size(); ++i) numText += (i ? " " : "") + parts[i];
  }
  std::string denText;
  std::size_t i = 0;
  while (i < factors.size()) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    if (!denText.empty()) denText += " ";
    denText += "\\left(" + JoinLatex(Terms(factors[i], order), varX) + "\\right)";
    if (j - i > 1) denText += "^{" + std::to_string(j - i) + "}";
    i = j;
  }
  return LatexQuotient(numText, denText, factors.empty());
}

}  // namespace

std::string ToText(const Rational& q) { return q.str(); }

std::string ToText(const Poly1& p, std::string_view var) {
  return JoinText(Terms(p, var), "x");
}

std::string ToText(const Poly2& p) { return JoinText(Terms(p, Order::kLexXFirst), "x"); }

std::string ToText(const RatFunc1& f, std::string_view var) {
  return TextQuotient(Terms(f.num(), var), Terms(f.den(), var), "x");
}

std::string ToText(const RatFunc2& f) {
  return TextQuotient(Terms(f.num(), Order::kLexXFirst), Terms(f.den(), Order::kLexXFirst), "x");
}

std::string ToLatex(const Rational& q) { return LatexRational(q); }

std::string ToLatex(const Poly1& p, std::string_view var) {
  return JoinLatex(Terms(p, var), "x");
}

std::string ToLatex(const Poly2& p) { return JoinLatex(Terms(p, Order::kGraded), "x"); }

std::string ToLatex(const RatFunc1& f, std::string_view var) {
  const auto den = Terms(f.den(), var);
  return LatexQuotient(JoinLatex(Terms(f.num(), var), "x"), JoinLatex(den, "x"), IsOne(den));
}

std::string ToLatex(const RatFunc2& f) {
  const auto den = Terms(f.den(), Order::kGraded);
  return LatexQuotient(JoinLatex(Terms(f.num(), Order::kGraded), "x"), JoinLatex(den, "x"),
                       IsOne(den));
}

std::string ToLatexFactored(const RatFunc1& f, const std::vector<Poly1>& factors) {
  std::vector<Poly2> lifted;
  for (const Poly1& p : factors) lifted.push_back(AsPoly2(IntegerPrimitive(p)));
  std::sort(lifted.begin(), lifted.end(), [](const Poly2& a, const Poly2& b) {
    // Group equal factors; order by constant term magnitude for stable output.
    return a.coeff(0).coeff(0).abs() < b.coeff(0).coeff(0).abs();
  });
  bool ok = false;
  std::string out =
      LatexFactoredImpl(AsPoly2(f.num()), AsPoly2(f.den()), lifted, Order::kGraded, "x", ok);
  return ok ? out : ToLatex(f);
}

std::string ToLatexFactored(const RatFunc2& f, const std::vector<Poly2>& factors) {
  bool ok = false;
  std::string out = LatexFactoredImpl(f.num(), f.den(), factors, Order::kGraded, "x", ok);
  return ok ? out : ToLatex(f);
}

}  // namespace ballcell
