#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace ballcell {

/// Exact ratio of arbitrary-precision integers. Always stored in lowest terms
/// with a positive denominator, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(static_cast<long>(value)) {}
  Rational(long value) : value_(value) {}
  Rational(const mpz_class& value) : value_(value) {}
  /// Throws Error(kDivisionByZero) when den == 0.
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& value);

  /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational Parse(std::string_view text);

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }
  const mpq_class& gmp() const { return value_; }

  int sign() const { return sgn(value_); }
  bool isZero() const { return sign() == 0; }
  bool isOne() const { return value_ == 1; }
  bool isInteger() const { return den() == 1; }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  double toDouble() const { return value_.get_d(); }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(long exponent) const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

inline bool IsZero(const Rational& q) { return q.isZero(); }

/// Binomial coefficient C(n, k) as a big integer; zero outside 0 <= k <= n.
mpz_class Binomial(long n, long k);
mpz_class Factorial(long n);
mpz_class IntPow(long base, unsigned long exponent);

}  // namespace ballcell
