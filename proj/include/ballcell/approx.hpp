#pragma once

#include <vector>

#include "ballcell/big_decimal.hpp"
#include "ballcell/rational.hpp"

namespace ballcell {

/// Digit budget above which the limit estimator leaves exact rationals.
inline constexpr long kDefaultExactDigitBudget = 10'000;
inline constexpr int kDefaultLimitBalls = 400;

/// sum_{j=1}^{r} (1/j) (n/(n-1))^(j-1). Throws Error(kDomain) for n < 2.
Rational DlApproxMean(int cells, int balls);
/// sum_{j=1}^{r} (1/j^2) (n/(n-1))^(2j-2) - DlApproxMean(n, r).
Rational DlApproxVariance(int cells, int balls);

/// E_n(r) = M_n(r) - DlApproxMean(n, r), exact.
Rational ErrorE(int cells, int balls);
/// E_n(r) for r = 0..maxBalls.
std::vector<Rational> ErrorTable(int cells, int maxBalls);

struct ApproxReport {
  int cells = 0;
  int balls = 0;
  Rational approxMean;
  Rational exactMean;
  Rational error;  // exactMean - approxMean
  BigDecimal ratioMean;
  Rational approxVar;
  Rational exactVar;
  BigDecimal ratioVar;  // zero when approxVar is zero
};

ApproxReport MakeApproxReport(int cells, int balls, int precision = kDefaultPrecision);

struct LimitEstimate {
  int cells = 0;
  int balls = 0;      // r at which E_n(r) was evaluated
  BigDecimal value;   // E_n(balls)
  BigDecimal gap;     // |E_n(balls) - E_n(balls / 2)|
  bool exact = true;  // false when the decimal path was taken
};

/// E_n(rmax) as an estimate of lim_{r->oo} E_n(r), with the stabilization gap
/// against r = rmax/2. Uses exact rationals while the common denominator of
/// the mean recurrence stays under `digitBudget` digits and decimal
/// arithmetic (with enough guard digits to absorb the cancellation) beyond.
/// Throws Error(kDomain) for n <= 2 (the limit is trivially 0 for n = 2).
LimitEstimate ErrorLimitEstimate(int cells, int rmax = kDefaultLimitBalls,
                                 int precision = kDefaultPrecision,
                                 long digitBudget = kDefaultExactDigitBudget);

/// Doubles r from `rstart` until two successive estimates agree to within
/// 10^-(digits + 2), or r would exceed `rcap`.
struct StabilizedLimit {
  LimitEstimate estimate;
  bool stabilized = false;
};
StabilizedLimit StabilizedErrorLimit(int cells, int digits, int rstart = kDefaultLimitBalls,
                                     int rcap = 4 * kDefaultLimitBalls,
                                     int precision = kDefaultPrecision,
                                     long digitBudget = kDefaultExactDigitBudget);

}  // namespace ballcell
