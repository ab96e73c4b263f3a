#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ballcell/big_decimal.hpp"
#include "ballcell/pgf.hpp"

namespace ballcell {

inline constexpr std::int64_t kDefaultSimulationBallBudget = 100'000'000;

/// Identifies one random stream: a batch seed plus the trial index, which
/// selects the PCG stream. Trial streams never depend on execution order.
struct StreamSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

struct RoundTrace {
  int round = 0;                         // 1-based
  std::int64_t ballsBefore = 0;
  std::vector<std::uint32_t> assignment;  // cell (0-based) of each remaining ball
  std::int64_t captured = 0;             // cells holding exactly one ball
};

struct GameRun {
  std::int64_t duration = 0;
  std::vector<RoundTrace> trace;  // filled when requested
};

/// Plays one game: each round every remaining ball picks a uniform cell and
/// sole occupants are removed, until no balls remain. Throws
/// Error(kDivergent) for n = 1, r >= 2 and Error(kBudget) above `ballBudget`.
GameRun SimulateGame(std::int64_t balls, std::int64_t cells, StreamSeed seed,
                     bool recordTrace = false,
                     std::int64_t ballBudget = kDefaultSimulationBallBudget);

struct SimBatch {
  std::int64_t balls = 0;
  std::int64_t cells = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> durations;           // indexed by trial
  std::map<std::int64_t, std::int64_t> histogram;  // duration -> count
  Rational mean;
  Rational variance;  // unbiased sample variance; 0 for a single trial
};

/// T independent games; trial i uses StreamSeed{seed, i}. OpenMP-parallel,
/// `threads` <= 0 means the OpenMP default. The result does not depend on
/// the thread count.
SimBatch SimulateBatch(std::int64_t balls, std::int64_t cells, std::int64_t trials,
                       std::uint64_t seed, int threads = 0);
/// Single-threaded reference for SimulateBatch.
SimBatch SimulateBatchSerial(std::int64_t balls, std::int64_t cells, std::int64_t trials,
                             std::uint64_t seed);

struct GofReport {
  Rational totalVariation;  // exact, with the law's tail as one extra bin
  double chiSquare = 0.0;
  int degreesOfFreedom = 0;
  double criticalValue = 0.0;  // chi-square quantile at `level`
  double level = 0.999;
  bool passes = true;
};

/// Compares a batch with the exact duration law. Bins with expected count
/// >= 5 are kept; the rest are pooled. Throws Error(kMismatch) when batch and
/// law describe different (r, n), and Error(kDomain) when the law leaves more
/// than 1e-9 of the mass uncovered.
GofReport GofCompare(const SimBatch& batch, const DurationLaw& law, double level = 0.999);

}  // namespace ballcell
