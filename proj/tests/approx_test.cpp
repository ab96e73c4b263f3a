#include <gtest/gtest.h>

#include "ballcell/approx.hpp"
#include "ballcell/error.hpp"
#include "ballcell/pgf.hpp"

namespace ballcell {
namespace {

Rational Q(const char* s) { return Rational::Parse(s); }

TEST(DlApprox, MeanExamples) {
  EXPECT_EQ(DlApproxMean(2, 1), Rational(1));
  EXPECT_EQ(DlApproxMean(2, 3), Q("10/3"));
  EXPECT_EQ(DlApproxMean(3, 2), Q("7/4"));
  EXPECT_EQ(DlApproxMean(5, 0), Rational(0));
  EXPECT_THROW(DlApproxMean(1, 2), Error);
}

TEST(DlApprox, VarianceExamples) {
  EXPECT_EQ(DlApproxVariance(2, 1), Rational(0));
  EXPECT_EQ(DlApproxVariance(2, 2), Rational(0));
  EXPECT_EQ(DlApproxVariance(3, 2), Q("-3/16"));
}

TEST(ErrorE, TwoCellsIsExact) {
  const auto table = ErrorTable(2, 200);
  for (std::size_t r = 0; r < table.size(); ++r) EXPECT_TRUE(table[r].isZero()) << r;
  EXPECT_TRUE(ErrorE(2, 137).isZero());
}

TEST(ErrorE, Examples) {
  EXPECT_EQ(ErrorE(3, 1), Rational(0));
  // Regression constant; cross-checked below against the PGF route.
  EXPECT_EQ(ErrorE(3, 10), Q("-141488086213/8824570191360"));
  EXPECT_EQ(Moments(10, 3, 1).mean - DlApproxMean(3, 10), ErrorE(3, 10));
}

TEST(ErrorE, BelowOneInMagnitude) {
  for (int n = 3; n <= 6; ++n) {
    const auto table = ErrorTable(n, 5 * n);
    for (std::size_t r = 0; r < table.size(); ++r) {
      EXPECT_LT(table[r].abs(), Rational(1)) << "n=" << n << " r=" << r;
    }
  }
}

TEST(ApproxReport, Fields) {
  const auto rep = MakeApproxReport(4, 9);
  EXPECT_EQ(rep.error, rep.exactMean - rep.approxMean);
  EXPECT_EQ(rep.exactMean, MeanFast(9, 4));
  EXPECT_EQ(rep.exactVar, VarianceFast(9, 4));
  EXPECT_EQ(rep.ratioMean, BigDecimal(rep.exactMean / rep.approxMean));
  EXPECT_THROW(MakeApproxReport(1, 3), Error);
}

TEST(ApproxReport, MeanRatioConverges) {
  for (int n = 3; n <= 5; ++n) {
    Rational previous = -1;
    for (int r : {2 * n, 3 * n, 5 * n}) {
      const auto rep = MakeApproxReport(n, r);
      const Rational dev = (rep.exactMean / rep.approxMean - Rational(1)).abs();
      if (previous >= Rational(0)) EXPECT_LT(dev, previous) << "n=" << n << " r=" << r;
      previous = dev;
    }
    EXPECT_LT(previous, Q("1/20"));
  }
}

// The variance approximation is poor for r <= 5n (it can even be negative),
// so convergence is checked from 5n on.
TEST(ApproxReport, VarianceRatioConverges) {
  for (int n = 3; n <= 5; ++n) {
    Rational previous = -1;
    for (int r : {5 * n, 10 * n, 20 * n}) {
      const auto rep = MakeApproxReport(n, r);
      const Rational dev = (rep.exactVar / rep.approxVar - Rational(1)).abs();
      if (previous >= Rational(0)) EXPECT_LT(dev, previous) << "n=" << n << " r=" << r;
      previous = dev;
    }
    EXPECT_LT(previous, Q("1/1000000"));
  }
}

TEST(Limit, PublishedConstants) {
  const auto e3 = ErrorLimitEstimate(3);
  EXPECT_LT((e3.value - BigDecimal::Parse("0.04213658385")).abs(), BigDecimal::Parse("1e-8"));
  const auto e4 = ErrorLimitEstimate(4);
  EXPECT_LT((e4.value - BigDecimal::Parse("0.254461")).abs(), BigDecimal::Parse("1e-4"));
  const auto e5 = ErrorLimitEstimate(5);
  EXPECT_LT((e5.value - BigDecimal::Parse("0.5312")).abs(), BigDecimal::Parse("1e-3"));
  EXPECT_EQ(e3.balls, 400);
  EXPECT_LT(e3.gap, BigDecimal::Parse("1e-20"));
}

TEST(Limit, DecimalPathMatchesExact) {
  const auto exact = ErrorLimitEstimate(4, 80, 50, 1'000'000);
  const auto dec = ErrorLimitEstimate(4, 80, 50, 0);
  EXPECT_TRUE(exact.exact);
  EXPECT_FALSE(dec.exact);
  EXPECT_EQ(exact.value.toRational(), BigDecimal(ErrorE(4, 80)).toRational());
  EXPECT_LT((exact.value - dec.value).abs(), BigDecimal::Parse("1e-45"));
}

TEST(Limit, Stabilization) {
  const auto st = StabilizedErrorLimit(3, 10, 100);
  EXPECT_TRUE(st.stabilized);
  EXPECT_LT((st.estimate.value - BigDecimal::Parse("0.04213658385")).abs(),
            BigDecimal::Parse("1e-11"));
}

TEST(Limit, RejectsTwoCells) {
  try {
    (void)ErrorLimitEstimate(2);
    FAIL() << "n = 2 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDomain);
  }
}

}  // namespace
}  // namespace ballcell
