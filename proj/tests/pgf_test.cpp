#include <gtest/gtest.h>

#include <cmath>

#include "ballcell/error.hpp"
#include "ballcell/game.hpp"
#include "ballcell/parse.hpp"
#include "ballcell/pgf.hpp"

namespace ballcell {
namespace {

Rational Q(const char* s) { return Rational::Parse(s); }
RatFunc1 Fx(const char* s) { return ParseRatFunc1(s, 'x'); }
RatFunc1 Fn(const char* s) { return ParseRatFunc1(s, 'n'); }

TEST(PgfNumeric, Examples) {
  EXPECT_EQ(PgfNumeric(2, 2).func, Fx("-x/(-2+x)"));
  EXPECT_EQ(PgfNumeric(3, 3).func, Fx("2x(5x+3)/((x-3)(x-9))"));
  EXPECT_EQ(PgfNumeric(0, 5).func, RatFunc1(Rational(1)));
  EXPECT_EQ(PgfNumeric(5, 5).func,
            Fx("24x(767x^3+63115x^2+182125x+15625)/((-5+x)(-25+x)(-125+13x)(-625+41x))"));
  EXPECT_EQ(PgfNumeric(1, 1).func, Fx("x"));
}

TEST(PgfNumeric, NonTerminating) {
  const auto f = PgfNumeric(3, 1);
  EXPECT_FALSE(f.terminates);
  EXPECT_TRUE(f.func.isZero());
  EXPECT_TRUE(PgfNumeric(1, 1).terminates);
  try {
    (void)Moments(3, 1, 2);
    FAIL() << "divergent moments accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDivergent);
  }
  EXPECT_THROW(MeanFast(2, 1), Error);
}

TEST(PgfNumeric, Normalized) {
  for (int r = 1; r <= 8; ++r) {
    for (int n = 2; n <= 8; ++n) {
      EXPECT_EQ(Evaluate(PgfNumeric(r, n).func, Rational(1)), Rational(1)) << r << "," << n;
    }
  }
}

TEST(PgfNumeric, SeriesMatchesMatrixPowering) {
  for (int r = 0; r <= 6; ++r) {
    for (int n = 1; n <= 6; ++n) {
      EXPECT_EQ(SeriesExpand(PgfNumeric(r, n).func, 25), DurationDistribution(r, n, 25))
          << "r=" << r << " n=" << n;
    }
  }
}

TEST(PgfNumeric, NonnegativeCoefficients) {
  for (int r = 0; r <= 6; ++r) {
    for (int n = 2; n <= 6; ++n) {
      for (const auto& c : SeriesExpand(PgfNumeric(r, n).func, 50)) EXPECT_GE(c, Rational(0));
    }
  }
}

TEST(Distribution, Examples) {
  const auto d = DurationDistribution(2, 2, 12);
  EXPECT_EQ(d[0], Rational(0));
  for (int k = 1; k <= 12; ++k) EXPECT_EQ(d[static_cast<std::size_t>(k)], Rational(1) / Rational(2).pow(k));
  for (const auto& p : DurationDistribution(3, 1, 10)) EXPECT_TRUE(p.isZero());
}

TEST(Distribution, CoveringLaw) {
  const Rational tail = Q("1/1000000000");
  const auto law = DurationLawCovering(4, 3, tail);
  Rational sum;
  for (const auto& p : law.probs) sum += p;
  EXPECT_EQ(sum + law.tailMass, Rational(1));
  EXPECT_LE(law.tailMass, tail);
  EXPECT_THROW(DurationLawCovering(2, 1, tail), Error);
}

TEST(PgfSymbolic, Examples) {
  EXPECT_EQ(PgfSymbolic(1).func, ParseRatFunc2("x"));
  EXPECT_EQ(PgfSymbolic(2).func, ParseRatFunc2("x(n-1)/(n-x)"));
  EXPECT_EQ(PgfSymbolic(3).func,
            ParseRatFunc2("x(n^3+2n^2x-3n^2-3nx+2n+x)/((n-x)(n^2-x))"));
  EXPECT_EQ(PgfSymbolic(0).func, ParseRatFunc2("1"));
}

TEST(PgfSymbolic, AgreesWithNumeric) {
  for (int r = 0; r <= 8; ++r) {
    const auto sym = PgfSymbolic(r);
    for (int n = 2; n <= 8; ++n) {
      EXPECT_EQ(SubstituteN(sym.func, Rational(n)), PgfNumeric(r, n).func) << r << "," << n;
    }
  }
}

// The reduced denominator is prod_{j=2}^{r} (n^(j-1) - c_j(n) x) with
// c_j(n) = n^(j-1) P_{j,j}(n), the no-capture count divided by n.
TEST(PgfSymbolic, DenominatorStructure) {
  for (int r = 0; r <= 8; ++r) {
    Poly2 product(Poly1(Rational(1)));
    for (int j = 2; j <= r; ++j) {
      const Poly1 noCapture = CaptureCountsSymbolic(j)[0];
      const Poly1 c = DivideExact(noCapture, Poly1::Variable());
      product *= Poly2(Poly1::Monomial(Rational(1), j - 1)) - VariableX() * Poly2(c);
    }
    EXPECT_EQ(IntegerPrimitive(PgfSymbolic(r).func.den()), IntegerPrimitive(product)) << r;
  }
  const Poly2 printed =
      ParseRatFunc2("(n-x)(n^2-x)(n^3-3nx+2x)(n^4-10nx+9x)").num();
  EXPECT_EQ(IntegerPrimitive(PgfSymbolic(5).func.den()), IntegerPrimitive(printed));
}

TEST(PgfSymbolic, Ceiling) {
  try {
    (void)PgfSymbolic(12, 10);
    FAIL() << "ceiling ignored";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudget);
  }
}

TEST(Moments, SymbolicMeans) {
  EXPECT_EQ(MomentsSymbolic(1, 1).mean, Fn("1"));
  EXPECT_EQ(MomentsSymbolic(2, 1).mean, Fn("n/(n-1)"));
  EXPECT_EQ(MomentsSymbolic(3, 1).mean, Fn("n(n+3)/(n^2-1)"));
  EXPECT_EQ(MomentsSymbolic(4, 1).mean, Fn("(n^2+7n-2)n^2/((n^3-3n+2)(n+1))"));
  EXPECT_EQ(MomentsSymbolic(5, 1).mean,
            Fn("n^2(n^5+12n^4-6n^3+48n^2-125n+10)/((n^4-10n+9)(n^2+n-2)(n+1))"));
}

TEST(Moments, MatchLiteralThetaOperator) {
  const RatFunc1 x(Poly1::Variable());
  for (auto [r, n] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{4, 5}, std::pair{6, 3}}) {
    const RatFunc1 f = PgfNumeric(r, n).func;
    const auto rep = Moments(r, n, 5);
    RatFunc1 g = f;
    for (int i = 1; i <= 5; ++i) {
      g = x * Derivative(g);
      EXPECT_EQ(rep.rawMoment(i), Evaluate(g, Rational(1))) << r << "," << n << " i=" << i;
    }
  }
  // Symbolic path: theta applied to F_{3,n}(x), then x = 1.
  const RatFunc2 xs(VariableX());
  RatFunc2 g = PgfSymbolic(3).func;
  const auto rep = MomentsSymbolic(3, 4);
  for (int i = 1; i <= 4; ++i) {
    g = xs * Derivative(g);
    EXPECT_EQ(rep.rawMoment(i), SubstituteX(g, Rational(1))) << i;
  }
}

TEST(Moments, CentralAndScaled) {
  const auto rep = Moments(2, 2, 6);
  // Duration is geometric(1/2): mean 2, variance 2, skewness^2 = 9/2, kurtosis 9 + 1/2.
  EXPECT_EQ(rep.mean, Rational(2));
  EXPECT_EQ(rep.variance, Rational(2));
  EXPECT_EQ(rep.variance, rep.rawMoment(2) - rep.mean * rep.mean);
  EXPECT_EQ(rep.centralMoment(2), rep.variance);
  EXPECT_EQ(rep.scaledMoment(3).squared, Q("9/2"));
  EXPECT_EQ(rep.scaledMoment(3).sign, 1);
  EXPECT_EQ(*rep.scaledMoment(4).exact, Q("19/2"));
  EXPECT_NEAR(rep.scaledMoment(3).value->toDouble(), std::sqrt(4.5), 1e-15);

  const auto single = Moments(1, 9, 4);
  EXPECT_EQ(single.mean, Rational(1));
  EXPECT_EQ(single.variance, Rational(0));
  EXPECT_FALSE(single.scaledDefined);
}

TEST(Moments, SymbolicAgreesWithNumeric) {
  const auto sym = MomentsSymbolic(4, 4);
  for (int n = 2; n <= 6; ++n) {
    const auto num = Moments(4, n, 4);
    for (int i = 1; i <= 4; ++i) {
      EXPECT_EQ(Evaluate(sym.rawMoment(i), Rational(n)), num.rawMoment(i));
    }
    EXPECT_EQ(Evaluate(sym.scaledMoment(3).squared, Rational(n)), num.scaledMoment(3).squared);
  }
}

TEST(MeanFast, Examples) {
  EXPECT_EQ(MeanFast(2, 2), Rational(2));
  EXPECT_EQ(MeanFast(3, 3), Q("9/4"));
  EXPECT_EQ(MeanFast(0, 7), Rational(0));
  EXPECT_EQ(MeanFast(1, 1), Rational(1));
}

TEST(MeanFast, MatchesPgfMoments) {
  for (int n = 2; n <= 8; ++n) {
    const auto table = MeanVarianceTable(n, 8);
    const auto means = MeanTable(n, 8);
    for (int r = 0; r <= 8; ++r) {
      const auto rep = Moments(r, n, 2);
      EXPECT_EQ(table[static_cast<std::size_t>(r)].mean, rep.mean);
      EXPECT_EQ(table[static_cast<std::size_t>(r)].variance, rep.variance);
      EXPECT_EQ(means[static_cast<std::size_t>(r)], rep.mean);
      EXPECT_EQ(MeanFast(r, n), rep.mean);
      EXPECT_EQ(VarianceFast(r, n), rep.variance);
    }
  }
}

TEST(MeanFast, DecimalTableTracksExact) {
  const auto exact = MeanTable(4, 120);
  const auto dec = MeanTableDecimal(4, 120, 60);
  for (std::size_t r = 0; r < exact.size(); r += 7) {
    EXPECT_LT((dec[r].toRational() - exact[r]).abs(), Q("1/1000000000000000000000000000000"));
  }
}

TEST(Diagonal, Examples) {
  const auto d = DiagonalSequence(3);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0].mean, Rational(1));
  EXPECT_EQ(d[1].mean, Rational(2));
  EXPECT_EQ(d[2].mean, Q("9/4"));
  EXPECT_EQ(d[1].variance, Rational(2));
}

TEST(Diagonal, ParallelMatchesSerial) {
  const auto a = DiagonalSequence(40);
  const auto b = DiagonalSequenceSerial(40);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].balls, b[i].balls);
    EXPECT_EQ(a[i].mean, b[i].mean);
    EXPECT_EQ(a[i].variance, b[i].variance);
  }
}

}  // namespace
}  // namespace ballcell
