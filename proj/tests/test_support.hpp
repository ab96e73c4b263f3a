#pragma once

#include <random>

#include "ballcell/polynomial.hpp"
#include "ballcell/rational.hpp"

namespace ballcell::testing {

// Small random rationals with a fixed generator, for property tests.
class RandomRationals {
 public:
  explicit RandomRationals(unsigned seed) : gen_(seed) {}

  Rational next(long span = 20) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return Rational(mpz_class(num(gen_)), mpz_class(den(gen_)));
  }
  Rational nonzero(long span = 20) {
    Rational q;
    while (q.isZero()) q = next(span);
    return q;
  }
  Poly1 poly1(int maxDegree) {
    std::uniform_int_distribution<int> deg(0, maxDegree);
    std::vector<Rational> c(static_cast<std::size_t>(deg(gen_)) + 1);
    for (auto& q : c) q = next(9);
    return Poly1(std::move(c));
  }
  Poly2 poly2(int maxDegX, int maxDegN) {
    std::uniform_int_distribution<int> deg(0, maxDegX);
    std::vector<Poly1> c(static_cast<std::size_t>(deg(gen_)) + 1);
    for (auto& p : c) p = poly1(maxDegN);
    return Poly2(std::move(c));
  }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

 private:
  std::mt19937 gen_;
};

}  // namespace ballcell::testing
