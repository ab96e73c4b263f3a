#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "ballcell/error.hpp"
#include "ballcell/montecarlo.hpp"
#include "ballcell/pcg32.hpp"

namespace ballcell {
namespace {

TEST(Pcg32, ReferenceSequence) {
  // pcg32-global-demo output for srandom(42, 54).
  Pcg32 rng(42, 54);
  const std::uint32_t want[] = {0xa15c02b7, 0x7b47f409, 0xba1d3330,
                                0x83d2f293, 0xbfa4784b, 0xcbed606e};
  for (auto w : want) EXPECT_EQ(rng.next(), w);
}

TEST(Pcg32, BoundedIsInRangeAndRoughlyUniform) {
  Pcg32 rng(7, 3);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto v = rng.bounded(7);
    ASSERT_LT(v, 7u);
    ++counts[v];
  }
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(SimulateGame, Examples) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    EXPECT_EQ(SimulateGame(1, 9, {s, 0}).duration, 1);
    EXPECT_EQ(SimulateGame(0, 3, {s, 0}).duration, 0);
  }
  // Pinned values: the generator and seeding are platform independent.
  EXPECT_EQ(SimulateGame(2, 2, {12345, 0}).duration, SimulateGame(2, 2, {12345, 0}).duration);
  const std::int64_t pinned[] = {1, 2, 1, 1, 1};
  for (std::uint64_t i = 0; i < 5; ++i) {
    EXPECT_EQ(SimulateGame(2, 2, {12345, i}).duration, pinned[i]) << i;
  }
  EXPECT_EQ(SimulateGame(1000, 1000, {1, 0}).duration, 5);
}

TEST(SimulateGame, RefusesDivergentAndOversized) {
  try {
    (void)SimulateGame(2, 1, {1, 0});
    FAIL() << "divergent game accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDivergent);
  }
  EXPECT_EQ(SimulateGame(1, 1, {1, 0}).duration, 1);
  try {
    (void)SimulateGame(100, 100, {1, 0}, false, 50);
    FAIL() << "budget ignored";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBudget);
  }
}

TEST(SimulateGame, TraceFollowsCaptureRule) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto run = SimulateGame(40, 25, {s, s}, true);
    ASSERT_EQ(static_cast<std::int64_t>(run.trace.size()), run.duration);
    std::int64_t balls = 40;
    for (const auto& round : run.trace) {
      EXPECT_EQ(round.ballsBefore, balls);
      ASSERT_EQ(static_cast<std::int64_t>(round.assignment.size()), balls);
      std::map<std::uint32_t, int> occupancy;
      for (auto c : round.assignment) {
        EXPECT_LT(c, 25u);
        ++occupancy[c];
      }
      std::int64_t singles = 0;
      for (const auto& [cell, k] : occupancy) singles += (k == 1);
      EXPECT_EQ(round.captured, singles);
      balls -= round.captured;
    }
    EXPECT_EQ(balls, 0);
  }
}

TEST(SimulateBatch, SingleBall) {
  const auto b = SimulateBatch(1, 5, 1000, 7);
  EXPECT_EQ(b.histogram, (std::map<std::int64_t, std::int64_t>{{1, 1000}}));
  EXPECT_EQ(b.mean, Rational(1));
  EXPECT_EQ(b.variance, Rational(0));
}

TEST(SimulateBatch, SummaryIsConsistent) {
  const auto b = SimulateBatch(7, 4, 5000, 3);
  ASSERT_EQ(b.durations.size(), 5000u);
  std::int64_t total = 0;
  for (const auto& [k, c] : b.histogram) total += c;
  EXPECT_EQ(total, 5000);
  Rational sum;
  for (auto d : b.durations) sum += Rational(static_cast<long>(d));
  EXPECT_EQ(b.mean, sum / Rational(5000));
  Rational ss;
  for (auto d : b.durations) ss += (Rational(static_cast<long>(d)) - b.mean).pow(2);
  EXPECT_EQ(b.variance, ss / Rational(4999));
}

TEST(SimulateBatch, IndependentOfThreadCount) {
  const auto one = SimulateBatch(9, 6, 4000, 77, 1);
  const auto eight = SimulateBatch(9, 6, 4000, 77, 8);
  const auto serial = SimulateBatchSerial(9, 6, 4000, 77);
  EXPECT_EQ(one.durations, eight.durations);
  EXPECT_EQ(one.durations, serial.durations);
  EXPECT_EQ(one.histogram, eight.histogram);
  EXPECT_EQ(one.mean, eight.mean);
}

TEST(SimulateBatch, TwoByTwoMean) {
  const std::int64_t trials = 100000;
  const auto b = SimulateBatch(2, 2, trials, 2024);
  // Exact law 2^-k: mean 2, variance 2.
  const double se = std::sqrt(2.0 / trials);
  EXPECT_LT(std::abs(b.mean.toDouble() - 2.0), 4 * se);
}

TEST(Gof, SyntheticExactMatch) {
  DurationLaw law{2, 2, {0, Rational(1, 2), Rational(1, 4), Rational(1, 4)}, 0};
  SimBatch batch{2, 2, 8, 0, {}, {{1, 4}, {2, 2}, {3, 2}}, {}, {}};
  const auto rep = GofCompare(batch, law);
  EXPECT_TRUE(rep.totalVariation.isZero());
  EXPECT_EQ(rep.chiSquare, 0.0);
}

TEST(Gof, Errors) {
  const auto law = DurationLawCovering(2, 2, Rational::Parse("1/10000000000"));
  const auto batch = SimulateBatch(3, 2, 100, 1);
  try {
    (void)GofCompare(batch, law);
    FAIL() << "mismatch accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMismatch);
  }
  const DurationLaw coarse{2, 2, {0, Rational(1, 2), Rational(1, 4)}, Rational(1, 4)};
  try {
    (void)GofCompare(SimulateBatch(2, 2, 100, 1), coarse);
    FAIL() << "uncovered mass accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDomain);
  }
}

TEST(Gof, TwoByTwoPasses) {
  const auto law = DurationLawCovering(2, 2, Rational::Parse("1/10000000000"));
  const auto rep = GofCompare(SimulateBatch(2, 2, 100000, 2024), law);
  EXPECT_TRUE(rep.passes) << rep.chiSquare << " vs " << rep.criticalValue;
  EXPECT_GT(rep.degreesOfFreedom, 5);
}

TEST(Gof, DetectsWrongLaw) {
  // Durations of (3,3) judged against the (3,4) law must fail.
  auto batch = SimulateBatch(3, 3, 100000, 5);
  batch.cells = 4;
  const auto law = DurationLawCovering(3, 4, Rational::Parse("1/10000000000"));
  EXPECT_FALSE(GofCompare(batch, law).passes);
}

}  // namespace
}  // namespace ballcell
