#pragma once

#include <vector>

#include "ballcell/big_decimal.hpp"
#include "ballcell/pgf.hpp"
#include "ballcell/rational_function.hpp"

namespace ballcell {

/// Step probabilities a(i) of the down-or-stay chain: from state i the chain
/// moves to i - 1 with probability a(i) and stays otherwise.
class StepSequence {
 public:
  enum class Kind { kTable, kPowerLaw, kBallCell };

  /// a(i) = values[i - 1]; each value must lie in (0, 1].
  static StepSequence Table(std::vector<Rational> values);
  /// a(i) = alpha^i with 0 < alpha < 1.
  static StepSequence PowerLaw(Rational alpha);
  /// a(i) = i ((n-1)/n)^(i-1), the one-step capture approximation of the
  /// ball-and-cell game. Values above 1 occur for small i (e.g. a(2) = 4/3 at
  /// n = 3), so this kind only feeds the moment sums, not the PGF.
  static StepSequence BallCell(int cells);

  Kind kind() const { return kind_; }
  const Rational& alpha() const { return alpha_; }
  int cells() const { return cells_; }

  /// a(i) for i >= 1. Throws Error(kDomain) past the end of a table.
  Rational at(int i) const;

 private:
  Kind kind_ = Kind::kTable;
  std::vector<Rational> table_;
  Rational alpha_;
  int cells_ = 0;
};

/// prod_{i=1}^{r} a(i) x / (1 - (1 - a(i)) x). Throws Error(kDomain) unless
/// every a(i) lies in (0, 1].
RatFunc1 GeoPGF(int r, const StepSequence& seq);

/// sum 1/a(i).
Rational GeoMean(int r, const StepSequence& seq);
/// sum 1/a(i)^2 - sum 1/a(i).
Rational GeoVariance(int r, const StepSequence& seq);

struct GeoMeanVariance {
  Rational mean;
  Rational variance;
};

/// Closed forms for a(i) = alpha^i:
///   mean     = (1 - alpha^r) / ((1 - alpha) alpha^r)
///   variance = (1 - alpha^r)(1 - alpha^(r+1)) / ((1 - alpha^2) alpha^(2r))
GeoMeanVariance GeoAlphaClosedForms(const Rational& alpha, int r);

/// r -> infinity limits of the scaled moments for a(i) = alpha^i. Squared
/// quantities are exact; their (positive) square roots are decimal.
struct GeoLimits {
  Rational alpha;
  Rational cvSquared;        // (sd / mean)^2
  Rational skewnessSquared;  // (m3 / m2^(3/2))^2
  Rational kurtosis;         // m4 / m2^2
  Rational fifthSquared;     // (m5 / m2^(5/2))^2
  Rational sixth;            // m6 / m2^3
  BigDecimal cv;
  BigDecimal skewness;
  BigDecimal fifth;
};

GeoLimits GeoAlphaLimits(const Rational& alpha, int precision = kDefaultPrecision);

inline constexpr int kDefaultGeoBallBudget = 200;

/// Moments of the alpha^i chain extracted from its PGF (exact, any order).
/// Throws Error(kBudget) when r exceeds `maxBalls`.
MomentReport<Rational> GeoMomentsNumeric(const Rational& alpha, int r, int order,
                                         int precision = kDefaultPrecision,
                                         int maxBalls = kDefaultGeoBallBudget);

}  // namespace ballcell
