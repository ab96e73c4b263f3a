#include "ballcell/rational.hpp"

#include <cctype>

#include "ballcell/error.hpp"

namespace ballcell {

const char* ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDivisionByZero: return "division by zero";
    case ErrorKind::kPole: return "pole";
    case ErrorKind::kDomain: return "domain error";
    case ErrorKind::kDivergent: return "divergent duration";
    case ErrorKind::kBudget: return "budget exceeded";
    case ErrorKind::kMismatch: return "mismatch";
    case ErrorKind::kParse: return "parse error";
  }
  return "error";
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  Require(den != 0, ErrorKind::kDivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  Require(value_.get_den() != 0, ErrorKind::kDivisionByZero,
          "rational with zero denominator");
  value_.canonicalize();
}

namespace {

bool ParseInteger(std::string_view text, mpz_class& out) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
  }
  std::string digits(text);
  if (digits[0] == '+') digits.erase(0, 1);
  return out.set_str(digits, 10) == 0;
}

std::string_view Trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

}  // namespace

Rational Rational::Parse(std::string_view text) {
  text = Trim(text);
  const auto slash = text.find('/');
  mpz_class num;
  mpz_class den = 1;
  const bool ok =
      slash == std::string_view::npos
          ? ParseInteger(text, num)
          : ParseInteger(Trim(text.substr(0, slash)), num) &&
                ParseInteger(Trim(text.substr(slash + 1)), den);
  Require(ok, ErrorKind::kParse, "not a rational: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  if (isInteger()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  Require(!isZero(), ErrorKind::kDivisionByZero, "inverse of zero");
  return Rational(den(), num());
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(exponent));
  Rational out;
  out.value_ = mpq_class(n, d);  // already coprime
  return out;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& other) {
  Require(!other.isZero(), ErrorKind::kDivisionByZero, "division by zero");
  value_ /= other.value_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational out;
  out.value_ = -a.value_;
  return out;
}

mpz_class Binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class Factorial(long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class IntPow(long base, unsigned long exponent) {
  mpz_class out;
  mpz_class b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

}  // namespace ballcell
