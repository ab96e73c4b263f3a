#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "ballcell/rational.hpp"

namespace ballcell {

inline constexpr int kDefaultPrecision = 50;

/// Decimal floating point: mantissa * 10^exponent with at most `precision`
/// significant digits. Every operation computes the exact result and rounds it
/// once, half to even, to the precision of its result.
class BigDecimal {
 public:
  BigDecimal() = default;
  explicit BigDecimal(const Rational& value, int precision = kDefaultPrecision);
  BigDecimal(long value, int precision) : BigDecimal(Rational(value), precision) {}

  static BigDecimal Parse(const std::string& text, int precision = kDefaultPrecision);

  int precision() const { return precision_; }
  const mpz_class& mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }
  int sign() const { return sgn(mantissa_); }
  bool isZero() const { return mantissa_ == 0; }

  /// Exact value of this decimal.
  Rational toRational() const;
  double toDouble() const;
  BigDecimal withPrecision(int precision) const;
  BigDecimal abs() const;
  /// Correctly rounded square root; throws Error(kDomain) for negative input.
  BigDecimal sqrt() const;

  /// Plain positional notation ("0.0421365838..."), switching to scientific
  /// ("1.25e+70") when the positional form would be unreasonably long.
  std::string str() const;
  /// Fixed notation with exactly `decimals` digits after the point.
  std::string fixed(int decimals) const;

  friend BigDecimal operator+(const BigDecimal& a, const BigDecimal& b);
  friend BigDecimal operator-(const BigDecimal& a, const BigDecimal& b);
  friend BigDecimal operator*(const BigDecimal& a, const BigDecimal& b);
  friend BigDecimal operator/(const BigDecimal& a, const BigDecimal& b);
  friend BigDecimal operator-(const BigDecimal& a);

  friend bool operator==(const BigDecimal& a, const BigDecimal& b);
  friend std::strong_ordering operator<=>(const BigDecimal& a, const BigDecimal& b);

 private:
  BigDecimal(mpz_class mantissa, std::int64_t exponent, int precision);
  void round();

  mpz_class mantissa_ = 0;
  std::int64_t exponent_ = 0;
  int precision_ = kDefaultPrecision;
};

}  // namespace ballcell
