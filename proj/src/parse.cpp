#include "ballcell/parse.hpp"

#include <cctype>
#include <string>

namespace ballcell {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFunc2 parse() {
    RatFunc2 value = expression();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kParse, "cannot parse '" + std::string(text_) + "' at offset " +
                                       std::to_string(pos_) + ": " + what);
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RatFunc2 expression() {
    RatFunc2 value = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      RatFunc2 rhs = term();
      value = c == '+' ? value + rhs : value - rhs;
    }
    return value;
  }

  bool startsPrimary(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'n' || c == 'x' || c == '(';
  }

  RatFunc2 term() {
    RatFunc2 value = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        value = value * unary();
      } else if (c == '/') {
        ++pos_;
        RatFunc2 rhs = unary();
        if (rhs.isZero()) fail("division by zero");
        value = value / rhs;
      } else if (startsPrimary(c)) {
        value = value * power();
      } else {
        return value;
      }
    }
  }

  RatFunc2 unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  RatFunc2 power() {
    RatFunc2 base = primary();
    if (peek() == '^') {
      ++pos_;
      skipSpace();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      return base.pow(e);
    }
    return base;
  }

  RatFunc2 primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RatFunc2 inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'n') {
      ++pos_;
      return RatFunc2(VariableN());
    }
    if (c == 'x') {
      ++pos_;
      return RatFunc2(VariableX());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class v(std::string(text_.substr(start, pos_ - start)));
      return RatFunc2(Rational(v));
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool DependsOnN(const Poly2& p) {
  for (const auto& c : p.coeffs()) {
    if (c.degree() > 0) return true;
  }
  return false;
}

}  // namespace

RatFunc2 ParseRatFunc2(std::string_view text) { return Parser(text).parse(); }

RatFunc1 ParseRatFunc1(std::string_view text, char var) {
  const RatFunc2 f = ParseRatFunc2(text);
  if (var == 'x') {
    Require(!DependsOnN(f.num()) && !DependsOnN(f.den()), ErrorKind::kParse,
            "expression must not involve n: '" + std::string(text) + "'");
    return SubstituteN(f, Rational(0));
  }
  Require(var == 'n', ErrorKind::kParse, "variable must be 'x' or 'n'");
  Require(f.num().degree() <= 0 && f.den().degree() <= 0, ErrorKind::kParse,
          "expression must not involve x: '" + std::string(text) + "'");
  return SubstituteX(f, Rational(0));
}

}  // namespace ballcell
