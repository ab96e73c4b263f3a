#include "ballcell/rational_function.hpp"

namespace ballcell {

Rational Evaluate(const RatFunc1& f, const Rational& x0) {
  const Rational d = f.den().evaluate(x0);
  Require(!d.isZero(), ErrorKind::kPole, "pole at x = " + x0.str());
  return f.num().evaluate(x0) / d;
}

std::vector<Rational> SeriesExpand(const RatFunc1& f, int kmax) {
  Require(kmax >= 0, ErrorKind::kDomain, "series order must be nonnegative");
  const Poly1& num = f.num();
  const Poly1& den = f.den();
  const Rational& d0 = den.coeff(0);
  Require(!d0.isZero(), ErrorKind::kPole, "no Maclaurin expansion: denominator vanishes at 0");
  const Rational inv = d0.inverse();
  std::vector<Rational> c(static_cast<std::size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) {
    Rational acc = num.coeff(k);
    for (int i = 1; i <= std::min(k, den.degree()); ++i) {
      acc -= den.coeff(i) * c[static_cast<std::size_t>(k - i)];
    }
    c[static_cast<std::size_t>(k)] = acc * inv;
  }
  return c;
}

RatFunc1 SubstituteN(const RatFunc2& f, const Rational& n0) {
  Poly1 den = SubstituteN(f.den(), n0);
  Require(!den.isZero(), ErrorKind::kPole,
          "denominator vanishes identically at n = " + n0.str());
  return RatFunc1(SubstituteN(f.num(), n0), std::move(den));
}

RatFunc1 SubstituteX(const RatFunc2& f, const Rational& x0) {
  Poly1 den = SubstituteX(f.den(), x0);
  Require(!den.isZero(), ErrorKind::kPole,
          "denominator vanishes identically at x = " + x0.str());
  return RatFunc1(SubstituteX(f.num(), x0), std::move(den));
}

RatFunc2 LiftN(const RatFunc1& f) {
  return RatFunc2::FromCoprime(ConstantInX(f.num()), ConstantInX(f.den()));
}

}  // namespace ballcell
