#include <gtest/gtest.h>

#include "ballcell/error.hpp"
#include "ballcell/game.hpp"

namespace ballcell {
namespace {

Rational Q(const char* s) { return Rational::Parse(s); }

TEST(Transition, Examples) {
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(TransitionProb(n, 1, 1), Rational(1));
  EXPECT_EQ(TransitionProb(2, 2, 0), Q("1/2"));
  EXPECT_EQ(TransitionProb(2, 2, 1), Rational(0));
  EXPECT_EQ(TransitionProb(2, 2, 2), Q("1/2"));
  EXPECT_EQ(TransitionProb(3, 4, 4), Rational(0));
  EXPECT_EQ(TransitionProb(5, 0, 0), Rational(1));
  EXPECT_EQ(TransitionProb(1, 3, 0), Rational(1));
}

TEST(Transition, RangeErrors) {
  EXPECT_THROW(TransitionProb(0, 1, 0), Error);
  EXPECT_THROW(TransitionProb(3, 2, 3), Error);
  EXPECT_THROW(TransitionProb(3, 2, -1), Error);
}

TEST(Transition, RowsSumToOne) {
  for (int n = 1; n <= 6; ++n) {
    for (int r = 0; r <= 6; ++r) {
      Rational sum;
      for (const auto& p : ComputeTransitionRow(n, r).probs) {
        EXPECT_GE(p, Rational(0));
        EXPECT_LE(p, Rational(1));
        sum += p;
      }
      EXPECT_EQ(sum, Rational(1)) << "n=" << n << " r=" << r;
    }
  }
}

TEST(Transition, ImpossibleCaptures) {
  for (int n = 1; n <= 7; ++n) {
    for (int r = 0; r <= 9; ++r) {
      const auto row = ComputeTransitionRow(n, r);
      for (int t = n + 1; t <= r; ++t) EXPECT_TRUE(row.probs[static_cast<std::size_t>(t)].isZero());
      // All but exactly one captured: the last ball would be alone too.
      if (r >= 2 && r - 1 <= n) {
        EXPECT_TRUE(row.probs[static_cast<std::size_t>(r - 1)].isZero()) << n << " " << r;
      }
    }
  }
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(BruteForceRow(2, 2).probs, (std::vector<Rational>{Q("1/2"), 0, Q("1/2")}));
  EXPECT_EQ(BruteForceRow(5, 1).probs, (std::vector<Rational>{0, 1}));
  EXPECT_EQ(BruteForceRow(1, 3).probs, (std::vector<Rational>{1, 0, 0, 0}));
  EXPECT_EQ(BruteForceRow(4, 0).probs, (std::vector<Rational>{1}));
}

TEST(BruteForce, MatchesFormula) {
  for (int n = 1; n <= 6; ++n) {
    for (int r = 0; r <= 6; ++r) {
      EXPECT_EQ(ComputeTransitionRow(n, r).probs, BruteForceRow(n, r).probs)
          << "n=" << n << " r=" << r;
    }
  }
}

TEST(BruteForce, ParallelMatchesSerial) {
  for (auto [n, r] : {std::pair{7, 7}, std::pair{3, 12}, std::pair{10, 5}}) {
    EXPECT_EQ(BruteForceRow(n, r).probs, BruteForceRowSerial(n, r).probs);
  }
}

TEST(BruteForce, Budget) {
  try {
    (void)BruteForceRow(10, 8, 1'000'000);
    FAIL() << "budget ignored";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudget);
  }
}

TEST(Symbolic, Examples) {
  // Two balls share a cell (nothing captured) with probability 1/n.
  const RatFunc1 none = TransitionProbSymbolic(2, 0);
  const RatFunc1 both = TransitionProbSymbolic(2, 2);
  const Poly1 n = Poly1::Variable();
  EXPECT_EQ(none, RatFunc1(Poly1(Rational(1)), n));
  EXPECT_EQ(both, RatFunc1(n - Poly1(Rational(1)), n));
  for (int k = 2; k <= 6; ++k) {
    EXPECT_EQ(Evaluate(none, Rational(k)), BruteForceRow(k, 2).probs[0]);
    EXPECT_EQ(Evaluate(both, Rational(k)), BruteForceRow(k, 2).probs[2]);
  }
  EXPECT_EQ(TransitionProbSymbolic(1, 1), RatFunc1(Rational(1)));
  EXPECT_EQ(Evaluate(TransitionProbSymbolic(4, 0), Rational(4)), TransitionProb(4, 4, 0));
}

TEST(Symbolic, AgreesWithNumeric) {
  for (int r = 0; r <= 6; ++r) {
    for (int t = 0; t <= r; ++t) {
      const RatFunc1 f = TransitionProbSymbolic(r, t);
      for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(Evaluate(f, Rational(n)), TransitionProb(n, r, t))
            << "r=" << r << " t=" << t << " n=" << n;
      }
    }
  }
}

// For fixed n, P_{r,r}(n) = 1 - r q^(r-1) + (geometrically smaller terms),
// q = (n-1)/n: the relative error of the one-capture approximation at least
// halves each time r doubles.
TEST(Asymptotics, NoCaptureProbability) {
  for (int n = 3; n <= 5; ++n) {
    const Rational q(mpz_class(n - 1), mpz_class(n));
    Rational previous = -1;
    for (int r : {10, 20, 40, 80}) {
      const Rational a = Rational(r) * q.pow(r - 1);
      const Rational rel = (TransitionProb(n, r, 0) - (Rational(1) - a)).abs() / a;
      if (previous >= Rational(0)) {
        EXPECT_LE(rel * Rational(2), previous) << "n=" << n << " r=" << r;
      }
      previous = rel;
    }
  }
}

}  // namespace
}  // namespace ballcell
