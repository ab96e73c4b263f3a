#include "ballcell/geometric.hpp"

#include <string>

#include "ballcell/error.hpp"

namespace ballcell {
namespace {

void CheckAlpha(const Rational& alpha) {
  Require(alpha > Rational(0) && alpha < Rational(1), ErrorKind::kDomain,
          "alpha must lie strictly between 0 and 1, got " + alpha.str());
}

void CheckProbability(const Rational& a, int i) {
  Require(a > Rational(0) && a <= Rational(1), ErrorKind::kDomain,
          "a(" + std::to_string(i) + ") = " + a.str() + " is not in (0, 1]");
}

// Validates a(1..r) for the moment sums: positivity always, a <= 1 unless
// the sequence is the ball-cell approximation.
std::vector<Rational> Steps(int r, const StepSequence& seq) {
  Require(r >= 0, ErrorKind::kDomain, "r must be >= 0");
  std::vector<Rational> a;
  a.reserve(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    a.push_back(seq.at(i));
    if (seq.kind() == StepSequence::Kind::kBallCell) {
      Require(a.back() > Rational(0), ErrorKind::kDomain, "step probability must be positive");
    } else {
      CheckProbability(a.back(), i);
    }
  }
  return a;
}

}  // namespace

StepSequence StepSequence::Table(std::vector<Rational> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    CheckProbability(values[i], static_cast<int>(i) + 1);
  }
  StepSequence s;
  s.kind_ = Kind::kTable;
  s.table_ = std::move(values);
  return s;
}

StepSequence StepSequence::PowerLaw(Rational alpha) {
  CheckAlpha(alpha);
  StepSequence s;
  s.kind_ = Kind::kPowerLaw;
  s.alpha_ = std::move(alpha);
  return s;
}

StepSequence StepSequence::BallCell(int cells) {
  Require(cells >= 2, ErrorKind::kDomain, "ball-cell step sequence needs n >= 2");
  StepSequence s;
  s.kind_ = Kind::kBallCell;
  s.cells_ = cells;
  return s;
}

Rational StepSequence::at(int i) const {
  Require(i >= 1, ErrorKind::kDomain, "step index must be >= 1");
  switch (kind_) {
    case Kind::kTable:
      Require(static_cast<std::size_t>(i) <= table_.size(), ErrorKind::kDomain,
              "step table has no entry for state " + std::to_string(i));
      return table_[static_cast<std::size_t>(i - 1)];
    case Kind::kPowerLaw:
      return alpha_.pow(i);
    case Kind::kBallCell:
      return Rational(i) * Rational(mpz_class(cells_ - 1), mpz_class(cells_)).pow(i - 1);
  }
  return Rational(0);
}

RatFunc1 GeoPGF(int r, const StepSequence& seq) {
  Require(r >= 0, ErrorKind::kDomain, "r must be >= 0");
  Rational scale(1);
  Poly1 den(Rational(1));
  for (int i = 1; i <= r; ++i) {
    const Rational a = seq.at(i);
    CheckProbability(a, i);
    scale *= a;
    den *= Poly1({Rational(1), a - Rational(1)});
  }
  // x^r and a denominator with constant term 1 share no factor.
  return RatFunc1::FromCoprime(Poly1::Monomial(scale, r), std::move(den));
}

Rational GeoMean(int r, const StepSequence& seq) {
  Rational sum;
  for (const auto& a : Steps(r, seq)) sum += a.inverse();
  return sum;
}

Rational GeoVariance(int r, const StepSequence& seq) {
  Rational sum;
  for (const auto& a : Steps(r, seq)) {
    const Rational inv = a.inverse();
    sum += inv * inv - inv;
  }
  return sum;
}

GeoMeanVariance GeoAlphaClosedForms(const Rational& alpha, int r) {
  CheckAlpha(alpha);
  Require(r >= 0, ErrorKind::kDomain, "r must be >= 0");
  const Rational one(1);
  const Rational ar = alpha.pow(r);
  GeoMeanVariance out;
  out.mean = (one - ar) / ((one - alpha) * ar);
  out.variance = (one - ar) * (one - ar * alpha) / ((one - alpha * alpha) * ar * ar);
  return out;
}

GeoLimits GeoAlphaLimits(const Rational& alpha, int precision) {
  CheckAlpha(alpha);
  const Rational one(1);
  const Rational& a = alpha;
  const Rational a2 = a.pow(2), a3 = a.pow(3), a4 = a.pow(4);
  const Rational q3 = a2 + a + one;            // a^2 + a + 1
  const Rational q5 = a4 + a3 + a2 + a + one;  // a^4 + a^3 + a^2 + a + 1
  GeoLimits g;
  g.alpha = a;
  g.cvSquared = (one - a) / (one + a);
  g.skewnessSquared = Rational(4) * (one - a) * (a + one).pow(3) / q3.pow(2);
  g.kurtosis = Rational(3) * (Rational(3) - a2) / (a2 + one);
  const Rational quintic = a4 + a3 - Rational(5) * a2 - Rational(11) * a - Rational(11);
  g.fifthSquared = Rational(16) * (one - a) * quintic.pow(2) * (a + one).pow(3) /
                   (q3.pow(2) * q5.pow(2));
  const Rational sixthNum = Rational(5) * a.pow(8) + Rational(5) * a.pow(7) -
                            Rational(45) * a.pow(6) - Rational(130) * a.pow(5) -
                            Rational(180) * a4 - Rational(50) * a3 + Rational(135) * a2 +
                            Rational(265) * a + Rational(265);
  g.sixth = sixthNum / ((a2 + one) * (a2 - a + one) * q3.pow(2));
  g.cv = BigDecimal(g.cvSquared, precision).sqrt();
  g.skewness = BigDecimal(g.skewnessSquared, precision).sqrt();
  g.fifth = BigDecimal(g.fifthSquared, precision).sqrt();
  return g;
}

MomentReport<Rational> GeoMomentsNumeric(const Rational& alpha, int r, int order, int precision,
                                         int maxBalls) {
  CheckAlpha(alpha);
  Require(r >= 0, ErrorKind::kDomain, "r must be >= 0");
  Require(r <= maxBalls, ErrorKind::kBudget,
          "r = " + std::to_string(r) + " exceeds the budget of " + std::to_string(maxBalls));
  return MomentsOf(GeoPGF(r, StepSequence::PowerLaw(alpha)), order, precision);
}

}  // namespace ballcell
