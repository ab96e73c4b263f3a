#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "ballcell/error.hpp"
#include "ballcell/rational.hpp"

namespace ballcell {

/// Dense univariate polynomial over a commutative coefficient ring C.
/// coeffs()[i] is the coefficient of var^i; trailing zeros are never stored,
/// so the zero polynomial has no coefficients and degree -1.
///
/// Polynomial<Rational> is the univariate kernel (in x, or in n when it holds
/// a coefficient of a bivariate polynomial). Polynomial<Polynomial<Rational>>
/// is the bivariate kernel: a polynomial in x whose coefficients live in Q[n].
template <class C>
class Polynomial {
 public:
  using Coefficient = C;

  Polynomial() = default;
  Polynomial(C constant) {  // NOLINT: constants embed implicitly
    if (!IsZero(constant)) coeffs_.push_back(std::move(constant));
  }
  explicit Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial Monomial(C coefficient, int degree) {
    if (IsZero(coefficient)) return {};
    std::vector<C> c(static_cast<std::size_t>(degree) + 1);
    c.back() = std::move(coefficient);
    return Polynomial(std::move(c));
  }
  static Polynomial Variable() { return Monomial(C(Rational(1)), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }
  std::span<const C> coeffs() const { return coeffs_; }

  const C& coeff(int i) const {
    static const C kZero{};
    return (i < 0 || i > degree()) ? kZero : coeffs_[static_cast<std::size_t>(i)];
  }
  const C& leading() const { return coeff(degree()); }

  /// Horner evaluation at a point of any type S with C * S -> C.
  template <class S>
  C evaluate(const S& at) const {
    C acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * at + *it;
    }
    return acc;
  }

  /// Applies f to every coefficient, producing a polynomial over f's codomain.
  template <class F>
  auto mapCoefficients(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    std::vector<D> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return Polynomial<D>(std::move(out));
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<C> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      out[i - 1] = coeffs_[i] * C(Rational(static_cast<long>(i)));
    }
    return Polynomial(std::move(out));
  }

  /// Multiplication by var^k.
  Polynomial shifted(int k) const {
    if (isZero() || k == 0) return *this;
    std::vector<C> out(static_cast<std::size_t>(k), C{});
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
  }

  /// Multiplies every rational coefficient (at any nesting depth) by s.
  Polynomial scaled(const Rational& s) const {
    if (s.isZero()) return {};
    Polynomial out = *this;
    for (auto& c : out.coeffs_) {
      if constexpr (std::is_same_v<C, Rational>) {
        c *= s;
      } else {
        c = c.scaled(s);
      }
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial out = a;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.isZero() || b.isZero()) return {};
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (IsZero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (IsZero(b.coeffs_[j])) continue;
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  Polynomial pow(int exponent) const {
    Polynomial result(C(Rational(1)));
    Polynomial base = *this;
    while (exponent > 0) {
      if (exponent & 1) result *= base;
      base *= base;
      exponent >>= 1;
    }
    return result;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && IsZero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

template <class C>
bool IsZero(const Polynomial<C>& p) {
  return p.isZero();
}

/// Univariate polynomial over Q (variable x, or n when used as a coefficient).
using Poly1 = Polynomial<Rational>;
/// Bivariate polynomial: polynomial in x over Q[n].
using Poly2 = Polynomial<Poly1>;

// ---------------------------------------------------------------------------
// Division.

/// Exact quotient a / b in the coefficient domain, or nullopt if b does not
/// divide a there.
std::optional<Rational> TryDivideExact(const Rational& a, const Rational& b);
std::optional<Poly1> TryDivideExact(const Poly1& a, const Poly1& b);
std::optional<Poly2> TryDivideExact(const Poly2& a, const Poly2& b);

template <class P>
P DivideExact(const P& a, const P& b) {
  auto q = TryDivideExact(a, b);
  Require(q.has_value(), ErrorKind::kDomain, "polynomial division is not exact");
  return *std::move(q);
}

/// Quotient and remainder over Q: a = q*b + r with deg r < deg b.
std::pair<Poly1, Poly1> DivMod(const Poly1& a, const Poly1& b);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed without
/// any coefficient division.
template <class C>
Polynomial<C> PseudoRemainder(Polynomial<C> a, const Polynomial<C>& b) {
  Require(!b.isZero(), ErrorKind::kDivisionByZero, "pseudo-division by zero");
  const C& lb = b.leading();
  int steps = a.degree() - b.degree() + 1;
  while (!a.isZero() && a.degree() >= b.degree()) {
    const C la = a.leading();
    const int shift = a.degree() - b.degree();
    a = a * Polynomial<C>(lb) - (b * Polynomial<C>(la)).shifted(shift);
    --steps;
  }
  if (steps > 0) a = a * Polynomial<C>(lb).pow(steps);
  return a;
}

// ---------------------------------------------------------------------------
// Integer normalization and GCD.

/// Calls f on every rational coefficient, at any nesting depth.
template <class F>
void VisitRationals(const Rational& q, F&& f) {
  f(q);
}
template <class C, class F>
void VisitRationals(const Polynomial<C>& p, F&& f) {
  for (const auto& c : p.coeffs()) VisitRationals(c, f);
}

/// Leading rational coefficient in lexicographic order x > n.
inline const Rational& LeadingRational(const Rational& q) { return q; }
template <class C>
const Rational& LeadingRational(const Polynomial<C>& p) {
  return LeadingRational(p.leading());
}

/// The positive rational c such that p / c has coprime integer coefficients.
template <class P>
Rational RationalContent(const P& p) {
  mpz_class g = 0, l = 1;
  VisitRationals(p, [&](const Rational& q) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.den().get_mpz_t());
  });
  if (g == 0) return Rational(1);
  return Rational(g, l);
}

/// p scaled to coprime integer coefficients with a positive leading
/// coefficient (lexicographic x > n).
template <class P>
P IntegerPrimitive(const P& p) {
  if (p.isZero()) return p;
  Rational c = RationalContent(p);
  if (LeadingRational(p).sign() < 0) c = -c;
  return p.scaled(c.inverse());
}

inline Poly1 Monic(const Poly1& p) {
  return p.isZero() ? p : p.scaled(p.leading().inverse());
}

/// Monic GCD over Q[x]; Gcd(0, q) is monic q and Gcd(0, 0) is 0.
Poly1 Gcd(const Poly1& p, const Poly1& q);

/// GCD over Q[n, x], integer-primitive with positive leading coefficient
/// (lexicographic x > n).
Poly2 Gcd(const Poly2& p, const Poly2& q);

/// Content of p as a polynomial in x over Q[n]: the monic Q[n]-GCD of its
/// coefficients.
Poly1 ContentInX(const Poly2& p);

// ---------------------------------------------------------------------------
// Bivariate helpers.

/// Substitutes n = n0, producing a polynomial in x.
Poly1 SubstituteN(const Poly2& p, const Rational& n0);
/// Substitutes x = x0, producing a polynomial in n.
inline Poly1 SubstituteX(const Poly2& p, const Rational& x0) { return p.evaluate(x0); }
/// The Q[n]-polynomial embedded as a constant in x.
inline Poly2 ConstantInX(const Poly1& p) { return Poly2(p); }
/// The variable n as a bivariate polynomial.
inline Poly2 VariableN() { return Poly2(Poly1::Variable()); }
/// The variable x as a bivariate polynomial.
inline Poly2 VariableX() { return Poly2::Monomial(Poly1(Rational(1)), 1); }

}  // namespace ballcell
