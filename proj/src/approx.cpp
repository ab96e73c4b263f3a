#include "ballcell/approx.hpp"

#include <cmath>

#include "ballcell/error.hpp"
#include "ballcell/pgf.hpp"

namespace ballcell {
namespace {

void CheckCells(int cells, int balls) {
  Require(cells >= 2, ErrorKind::kDomain, "the approximation needs n >= 2");
  Require(balls >= 0, ErrorKind::kDomain, "number of balls must be >= 0");
}

// Partial sums of (1/j) q^(j-1) for j = 1..maxBalls, q = n/(n-1).
std::vector<Rational> ApproxMeanTable(int cells, int maxBalls) {
  const Rational q(mpz_class(cells), mpz_class(cells - 1));
  std::vector<Rational> out(static_cast<std::size_t>(maxBalls) + 1);
  Rational power(1);
  for (int j = 1; j <= maxBalls; ++j) {
    out[static_cast<std::size_t>(j)] = out[static_cast<std::size_t>(j - 1)] + power / Rational(j);
    power *= q;
  }
  return out;
}

// Decimal digits of the recurrence's common denominator prod_{j<=r} g_j,
// bounded by sum_j j log10(n).
double DenominatorDigits(int cells, int balls) {
  return 0.5 * balls * (balls + 1.0) * std::log10(static_cast<double>(cells));
}

}  // namespace

Rational DlApproxMean(int cells, int balls) {
  CheckCells(cells, balls);
  return ApproxMeanTable(cells, balls).back();
}

Rational DlApproxVariance(int cells, int balls) {
  CheckCells(cells, balls);
  const Rational q2 = Rational(mpz_class(cells), mpz_class(cells - 1)).pow(2);
  Rational sum;
  Rational power(1);
  for (int j = 1; j <= balls; ++j) {
    sum += power / Rational(j).pow(2);
    power *= q2;
  }
  return sum - DlApproxMean(cells, balls);
}

Rational ErrorE(int cells, int balls) {
  CheckCells(cells, balls);
  return MeanFast(balls, cells) - DlApproxMean(cells, balls);
}

std::vector<Rational> ErrorTable(int cells, int maxBalls) {
  CheckCells(cells, maxBalls);
  const auto exact = MeanTable(cells, maxBalls);
  const auto approx = ApproxMeanTable(cells, maxBalls);
  std::vector<Rational> out;
  out.reserve(exact.size());
  for (std::size_t r = 0; r < exact.size(); ++r) out.push_back(exact[r] - approx[r]);
  return out;
}

ApproxReport MakeApproxReport(int cells, int balls, int precision) {
  CheckCells(cells, balls);
  ApproxReport rep;
  rep.cells = cells;
  rep.balls = balls;
  const auto mv = MeanVarianceTable(cells, balls).back();
  rep.exactMean = mv.mean;
  rep.exactVar = mv.variance;
  rep.approxMean = DlApproxMean(cells, balls);
  rep.approxVar = DlApproxVariance(cells, balls);
  rep.error = rep.exactMean - rep.approxMean;
  rep.ratioMean = rep.approxMean.isZero() ? BigDecimal(0, precision)
                                          : BigDecimal(rep.exactMean / rep.approxMean, precision);
  rep.ratioVar = rep.approxVar.isZero() ? BigDecimal(0, precision)
                                        : BigDecimal(rep.exactVar / rep.approxVar, precision);
  return rep;
}

LimitEstimate ErrorLimitEstimate(int cells, int rmax, int precision, long digitBudget) {
  Require(cells >= 3, ErrorKind::kDomain,
          "limit estimation needs n >= 3 (E_2(r) = 0 identically)");
  Require(rmax >= 2, ErrorKind::kDomain, "rmax must be >= 2");
  const int half = rmax / 2;
  const auto approx = ApproxMeanTable(cells, rmax);
  LimitEstimate est;
  est.cells = cells;
  est.balls = rmax;
  if (DenominatorDigits(cells, rmax) <= static_cast<double>(digitBudget)) {
    const auto exact = MeanTable(cells, rmax);
    const Rational eFull = exact.back() - approx.back();
    const Rational eHalf = exact[static_cast<std::size_t>(half)] - approx[static_cast<std::size_t>(half)];
    est.value = BigDecimal(eFull, precision);
    est.gap = BigDecimal((eFull - eHalf).abs(), precision);
    est.exact = true;
    return est;
  }
  // E_n(r) is a difference of two numbers of size ~ (n/(n-1))^r / r; carry
  // that many extra digits so the subtraction leaves `precision` good ones.
  const double magnitude =
      std::max(1.0, std::log10(std::max(1.0, approx.back().toDouble())));
  const int working = precision + static_cast<int>(std::ceil(magnitude)) + 20;
  const auto means = MeanTableDecimal(cells, rmax, working);
  const BigDecimal eFull = means.back() - BigDecimal(approx.back(), working);
  const BigDecimal eHalf =
      means[static_cast<std::size_t>(half)] - BigDecimal(approx[static_cast<std::size_t>(half)], working);
  est.value = eFull.withPrecision(precision);
  est.gap = (eFull - eHalf).abs().withPrecision(precision);
  est.exact = false;
  return est;
}

StabilizedLimit StabilizedErrorLimit(int cells, int digits, int rstart, int rcap, int precision,
                                     long digitBudget) {
  Require(digits >= 1, ErrorKind::kDomain, "digits must be >= 1");
  const BigDecimal tolerance(Rational(1) / Rational(IntPow(10, static_cast<unsigned long>(digits + 2))),
                             precision);
  StabilizedLimit out;
  for (int r = rstart;; r *= 2) {
    out.estimate = ErrorLimitEstimate(cells, r, precision, digitBudget);
    out.stabilized = out.estimate.gap < tolerance;
    if (out.stabilized || 2 * r > rcap) return out;
  }
}

}  // namespace ballcell
