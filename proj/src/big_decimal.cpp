#include "ballcell/big_decimal.hpp"

#include <algorithm>
#include <cmath>

#include "ballcell/error.hpp"

namespace ballcell {
namespace {

mpz_class Pow10(std::uint64_t k) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, k);
  return out;
}

// Exact number of decimal digits of |m|; 0 for m == 0.
std::int64_t DigitCount(const mpz_class& m) {
  if (m == 0) return 0;
  mpz_class a = ::abs(m);
  auto d = static_cast<std::int64_t>(mpz_sizeinbase(a.get_mpz_t(), 10));
  if (a < Pow10(static_cast<std::uint64_t>(d - 1))) --d;
  return d;
}

// q = round_half_even(num / den) for den > 0.
mpz_class DivRoundHalfEven(const mpz_class& num, const mpz_class& den) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int c = cmp(2 * r, den);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  return q;
}

}  // namespace

BigDecimal::BigDecimal(mpz_class mantissa, std::int64_t exponent, int precision)
    : mantissa_(std::move(mantissa)), exponent_(exponent), precision_(precision) {
  Require(precision_ >= 1, ErrorKind::kDomain, "decimal precision must be >= 1");
  round();
}

BigDecimal::BigDecimal(const Rational& value, int precision) : precision_(precision) {
  Require(precision_ >= 1, ErrorKind::kDomain, "decimal precision must be >= 1");
  if (value.isZero()) return;
  const mpz_class& num = value.num();
  const mpz_class& den = value.den();
  // Choose e so that |num/den| / 10^e has precision digits before rounding.
  const std::int64_t e =
      (DigitCount(num) - DigitCount(den)) - static_cast<std::int64_t>(precision_) - 1;
  mpz_class n = num, d = den;
  if (e >= 0) {
    d *= Pow10(static_cast<std::uint64_t>(e));
  } else {
    n *= Pow10(static_cast<std::uint64_t>(-e));
  }
  // n/d has precision+1 or precision+2 integer digits; keep the fraction
  // exact by scaling once more so that rounding happens exactly once.
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  // q has >= precision+1 digits; fold the remainder into a sticky digit.
  mantissa_ = q * 10 + (r != 0 ? (sgn(r) > 0 ? 1 : -1) : 0);
  exponent_ = e - 1;
  round();
}

void BigDecimal::round() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  const std::int64_t digits = DigitCount(mantissa_);
  if (digits > precision_) {
    const auto shift = static_cast<std::uint64_t>(digits - precision_);
    const mpz_class scale = Pow10(shift);
    const bool negative = mantissa_ < 0;
    mpz_class q = DivRoundHalfEven(::abs(mantissa_), scale);
    mantissa_ = negative ? mpz_class(-q) : q;
    exponent_ += static_cast<std::int64_t>(shift);
    if (DigitCount(mantissa_) > precision_) {  // carry, e.g. 999.5 -> 1000
      mantissa_ /= 10;
      exponent_ += 1;
    }
  }
  // Strip trailing zeros so equal values compare structurally.
  while (mantissa_ != 0 && mpz_divisible_ui_p(mantissa_.get_mpz_t(), 10)) {
    mantissa_ /= 10;
    exponent_ += 1;
  }
}

BigDecimal BigDecimal::Parse(const std::string& text, int precision) {
  std::string s = text;
  std::int64_t exp = 0;
  const auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    try {
      exp = std::stoll(s.substr(epos + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::kParse, "not a decimal: '" + text + "'");
    }
    s = s.substr(0, epos);
  }
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    exp -= static_cast<std::int64_t>(s.size() - dot - 1);
    s.erase(dot, 1);
  }
  mpz_class m;
  if (s.empty() || s == "-" || s == "+" || m.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) {
    throw Error(ErrorKind::kParse, "not a decimal: '" + text + "'");
  }
  return BigDecimal(m, exp, precision);
}

Rational BigDecimal::toRational() const {
  if (exponent_ >= 0) return Rational(mpz_class(mantissa_ * Pow10(static_cast<std::uint64_t>(exponent_))));
  return Rational(mantissa_, Pow10(static_cast<std::uint64_t>(-exponent_)));
}

double BigDecimal::toDouble() const {
  if (mantissa_ == 0) return 0.0;
  // Use the leading 17 digits to avoid overflowing intermediate doubles.
  const std::int64_t digits = DigitCount(mantissa_);
  mpz_class m = mantissa_;
  std::int64_t e = exponent_;
  if (digits > 17) {
    m /= Pow10(static_cast<std::uint64_t>(digits - 17));
    e += digits - 17;
  }
  return m.get_d() * std::pow(10.0, static_cast<double>(e));
}

BigDecimal BigDecimal::withPrecision(int precision) const {
  return BigDecimal(mantissa_, exponent_, precision);
}

BigDecimal BigDecimal::abs() const {
  return BigDecimal(::abs(mantissa_), exponent_, precision_);
}

BigDecimal BigDecimal::sqrt() const {
  Require(sign() >= 0, ErrorKind::kDomain, "square root of a negative decimal");
  if (isZero()) return *this;
  // Scale to m * 10^(2k) with enough digits that floor(sqrt) has
  // precision + 2 digits; ties are impossible (see below), so one rounding
  // step of the floor plus sticky bit is exact.
  mpz_class m = mantissa_;
  std::int64_t e = exponent_;
  const std::int64_t want = 2 * (static_cast<std::int64_t>(precision_) + 2);
  std::int64_t digits = DigitCount(m);
  std::int64_t pad = std::max<std::int64_t>(0, want - digits);
  if ((e - pad) % 2 != 0) ++pad;
  m *= Pow10(static_cast<std::uint64_t>(pad));
  e -= pad;
  mpz_class root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
  // An inexact root is irrational-adjacent: append a sticky digit so the
  // subsequent round() never sees an artificial tie.
  mpz_class sticky = root * 10 + (rem != 0 ? 1 : 0);
  return BigDecimal(sticky, e / 2 - 1, precision_);
}

std::string BigDecimal::str() const {
  if (mantissa_ == 0) return "0";
  std::string digits = mpz_class(::abs(mantissa_)).get_str();
  const std::string sign = mantissa_ < 0 ? "-" : "";
  const auto nd = static_cast<std::int64_t>(digits.size());
  const std::int64_t point = nd + exponent_;  // position of decimal point
  if (point > 60 || point < -20) {
    std::string out = sign + digits.substr(0, 1);
    if (nd > 1) out += "." + digits.substr(1);
    const std::int64_t sci = point - 1;
    out += (sci >= 0 ? "e+" : "e-") + std::to_string(sci >= 0 ? sci : -sci);
    return out;
  }
  if (exponent_ >= 0) return sign + digits + std::string(static_cast<std::size_t>(exponent_), '0');
  if (point > 0) {
    return sign + digits.substr(0, static_cast<std::size_t>(point)) + "." +
           digits.substr(static_cast<std::size_t>(point));
  }
  return sign + "0." + std::string(static_cast<std::size_t>(-point), '0') + digits;
}

std::string BigDecimal::fixed(int decimals) const {
  const Rational scaled = toRational() * Rational(Pow10(static_cast<std::uint64_t>(decimals)));
  const mpz_class q = DivRoundHalfEven(::abs(scaled.num()), scaled.den());
  std::string digits = q.get_str();
  if (static_cast<int>(digits.size()) <= decimals) {
    digits = std::string(static_cast<std::size_t>(decimals) + 1 - digits.size(), '0') + digits;
  }
  const std::string sign = (scaled.sign() < 0 && q != 0) ? "-" : "";
  if (decimals == 0) return sign + digits;
  const std::size_t split = digits.size() - static_cast<std::size_t>(decimals);
  return sign + digits.substr(0, split) + "." + digits.substr(split);
}

namespace {

void Align(const BigDecimal& a, const BigDecimal& b, mpz_class& ma, mpz_class& mb,
           std::int64_t& e) {
  e = std::min(a.exponent(), b.exponent());
  ma = a.mantissa() * Pow10(static_cast<std::uint64_t>(a.exponent() - e));
  mb = b.mantissa() * Pow10(static_cast<std::uint64_t>(b.exponent() - e));
}

}  // namespace

BigDecimal operator+(const BigDecimal& a, const BigDecimal& b) {
  if (a.isZero()) return b.withPrecision(std::max(a.precision_, b.precision_));
  if (b.isZero()) return a.withPrecision(std::max(a.precision_, b.precision_));
  mpz_class ma, mb;
  std::int64_t e;
  Align(a, b, ma, mb, e);
  return BigDecimal(mpz_class(ma + mb), e, std::max(a.precision_, b.precision_));
}

BigDecimal operator-(const BigDecimal& a) {
  return BigDecimal(mpz_class(-a.mantissa_), a.exponent_, a.precision_);
}

BigDecimal operator-(const BigDecimal& a, const BigDecimal& b) { return a + (-b); }

BigDecimal operator*(const BigDecimal& a, const BigDecimal& b) {
  return BigDecimal(mpz_class(a.mantissa_ * b.mantissa_), a.exponent_ + b.exponent_,
                    std::max(a.precision_, b.precision_));
}

BigDecimal operator/(const BigDecimal& a, const BigDecimal& b) {
  Require(!b.isZero(), ErrorKind::kDivisionByZero, "decimal division by zero");
  return BigDecimal(a.toRational() / b.toRational(), std::max(a.precision_, b.precision_));
}

bool operator==(const BigDecimal& a, const BigDecimal& b) {
  return a.mantissa_ == b.mantissa_ && a.exponent_ == b.exponent_;
}

std::strong_ordering operator<=>(const BigDecimal& a, const BigDecimal& b) {
  return a.toRational() <=> b.toRational();
}

}  // namespace ballcell
