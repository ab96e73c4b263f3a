#include "ballcell/polynomial.hpp"

namespace ballcell {

std::optional<Rational> TryDivideExact(const Rational& a, const Rational& b) {
  if (b.isZero()) return std::nullopt;
  return a / b;
}

std::pair<Poly1, Poly1> DivMod(const Poly1& a, const Poly1& b) {
  Require(!b.isZero(), ErrorKind::kDivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly1{}, a};
  std::vector<Rational> quotient(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const Rational inv = b.leading().inverse();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (top.isZero()) continue;
    const Rational factor = top * inv;
    quotient[static_cast<std::size_t>(k - db)] = factor;
    for (int i = 0; i <= db; ++i) {
      const Rational& bi = b.coeff(i);
      if (!bi.isZero()) rem[static_cast<std::size_t>(k - db + i)] -= factor * bi;
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly1(std::move(quotient)), Poly1(std::move(rem))};
}

std::optional<Poly1> TryDivideExact(const Poly1& a, const Poly1& b) {
  if (b.isZero()) return std::nullopt;
  auto [q, r] = DivMod(a, b);
  if (!r.isZero()) return std::nullopt;
  return std::move(q);
}

std::optional<Poly2> TryDivideExact(const Poly2& a, const Poly2& b) {
  if (b.isZero()) return std::nullopt;
  if (a.isZero()) return Poly2{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Poly1> quotient(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  Poly2 rem = a;
  while (!rem.isZero() && rem.degree() >= b.degree()) {
    auto c = TryDivideExact(rem.leading(), b.leading());
    if (!c) return std::nullopt;
    const int shift = rem.degree() - b.degree();
    quotient[static_cast<std::size_t>(shift)] = *c;
    rem -= (b * Poly2(*c)).shifted(shift);
  }
  if (!rem.isZero()) return std::nullopt;
  return Poly2(std::move(quotient));
}

Poly1 Gcd(const Poly1& p, const Poly1& q) {
  if (p.isZero()) return Monic(q);
  if (q.isZero()) return Monic(p);
  Poly1 a = IntegerPrimitive(p);
  Poly1 b = IntegerPrimitive(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  // Primitive remainder sequence over Z: coefficients stay integral and
  // bounded by the primitive-part step.
  while (!b.isZero()) {
    if (b.degree() == 0) return Poly1(Rational(1));
    Poly1 r = PseudoRemainder(a, b);
    a = std::move(b);
    b = r.isZero() ? Poly1{} : IntegerPrimitive(r);
  }
  return Monic(a);
}

Poly1 ContentInX(const Poly2& p) {
  Poly1 g;
  for (const auto& c : p.coeffs()) {
    g = Gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

namespace {

Poly2 DivideByContent(const Poly2& p, const Poly1& content) {
  return p.mapCoefficients([&](const Poly1& c) { return DivideExact(c, content); });
}

Poly2 PrimitivePartInX(const Poly2& p) {
  if (p.isZero()) return p;
  return DivideByContent(p, ContentInX(p));
}

}  // namespace

Poly2 Gcd(const Poly2& p, const Poly2& q) {
  if (p.isZero()) return IntegerPrimitive(q);
  if (q.isZero()) return IntegerPrimitive(p);
  const Poly1 cp = ContentInX(p);
  const Poly1 cq = ContentInX(q);
  const Poly1 content = Gcd(cp, cq);
  Poly2 a = DivideByContent(p, cp);
  Poly2 b = DivideByContent(q, cq);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.isZero()) {
    if (b.degree() == 0) {
      // b is primitive and constant in x, hence a unit in Q[n][x]/Q[n].
      a = Poly2(Poly1(Rational(1)));
      break;
    }
    Poly2 r = PseudoRemainder(a, b);
    a = std::move(b);
    b = PrimitivePartInX(r);
  }
  return IntegerPrimitive(Poly2(content) * PrimitivePartInX(a));
}

Poly1 SubstituteN(const Poly2& p, const Rational& n0) {
  return p.mapCoefficients([&](const Poly1& c) { return c.evaluate(n0); });
}

}  // namespace ballcell
