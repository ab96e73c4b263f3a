#pragma once

#include <vector>

#include "ballcell/polynomial.hpp"

namespace ballcell {

/// Quotient of polynomials kept in canonical form:
///  - numerator and denominator are coprime;
///  - all coefficients are integers with no common factor across both;
///  - the denominator's leading coefficient (lexicographic x > n) is positive;
///  - zero is 0/1.
/// Under these rules equal functions have identical representations.
template <class P>
class RationalFunction {
 public:
  RationalFunction() : den_(One()) {}
  RationalFunction(P polynomial)  // NOLINT: polynomials embed implicitly
      : num_(std::move(polynomial)), den_(One()) {
    canonicalize();
  }
  RationalFunction(Rational constant)  // NOLINT
      : RationalFunction(P(typename P::Coefficient(constant))) {}

  /// Reduces num/den by their GCD. Throws Error(kDivisionByZero) if den == 0.
  RationalFunction(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
    Require(!den_.isZero(), ErrorKind::kDivisionByZero,
            "rational function with zero denominator");
    const P g = Gcd(num_, den_);
    num_ = DivideExact(num_, g);
    den_ = DivideExact(den_, g);
    canonicalize();
  }

  /// Skips the GCD step; the caller guarantees num and den are coprime.
  static RationalFunction FromCoprime(P num, P den) {
    Require(!den.isZero(), ErrorKind::kDivisionByZero,
            "rational function with zero denominator");
    RationalFunction out;
    out.num_ = std::move(num);
    out.den_ = std::move(den);
    out.canonicalize();
    return out;
  }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }
  bool isPolynomial() const { return den_.degree() == 0; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    return FromCoprime(-a.num_, a.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    Require(!b.isZero(), ErrorKind::kDivisionByZero, "division by the zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  RationalFunction pow(int exponent) const {
    if (exponent < 0) return RationalFunction(One()) / pow(-exponent);
    return FromCoprime(num_.pow(exponent), den_.pow(exponent));
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  static P One() { return P(typename P::Coefficient(Rational(1))); }

  void canonicalize() {
    if (num_.isZero()) {
      den_ = One();
      return;
    }
    mpz_class g = 0, l = 1;
    auto visit = [&](const Rational& q) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.num().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.den().get_mpz_t());
    };
    VisitRationals(num_, visit);
    VisitRationals(den_, visit);
    Rational scale(l, g);
    if (LeadingRational(den_).sign() < 0) scale = -scale;
    if (!scale.isOne()) {
      num_ = num_.scaled(scale);
      den_ = den_.scaled(scale);
    }
  }

  P num_;
  P den_;
};

/// Rational function of one variable (x for PGFs, n for symbolic moments).
using RatFunc1 = RationalFunction<Poly1>;
/// Rational function of n and x.
using RatFunc2 = RationalFunction<Poly2>;

/// Equality by cross-multiplication, independent of normalization.
template <class P>
bool CrossEqual(const RationalFunction<P>& a, const RationalFunction<P>& b) {
  return a.num() * b.den() == b.num() * a.den();
}

/// Derivative with respect to x (the outer variable), reduced.
template <class P>
RationalFunction<P> Derivative(const RationalFunction<P>& f) {
  const P& n = f.num();
  const P& d = f.den();
  return RationalFunction<P>(n.derivative() * d - n * d.derivative(), d * d);
}

/// f(x0). Throws Error(kPole) when x0 is a pole.
Rational Evaluate(const RatFunc1& f, const Rational& x0);

/// First kmax+1 Maclaurin coefficients. Throws Error(kPole) if den(0) == 0.
std::vector<Rational> SeriesExpand(const RatFunc1& f, int kmax);

/// f(n0, x) as a function of x. Throws Error(kPole) if the denominator
/// vanishes identically at n0.
RatFunc1 SubstituteN(const RatFunc2& f, const Rational& n0);

/// f(n, x0) as a function of n. Throws Error(kPole) if the denominator
/// vanishes identically at x0.
RatFunc1 SubstituteX(const RatFunc2& f, const Rational& x0);

/// Embeds a function of n as a bivariate function constant in x.
RatFunc2 LiftN(const RatFunc1& f);

}  // namespace ballcell
