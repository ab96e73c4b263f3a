#include "ballcell/montecarlo.hpp"

#include <omp.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <string>

#include "ballcell/error.hpp"
#include "ballcell/pcg32.hpp"

namespace ballcell {
namespace {

void CheckGame(std::int64_t balls, std::int64_t cells, std::int64_t budget) {
  Require(balls >= 0, ErrorKind::kDomain, "number of balls must be >= 0");
  Require(cells >= 1 && cells <= 0xFFFFFFFFLL, ErrorKind::kDomain,
          "number of cells must lie in 1..2^32-1");
  Require(cells >= 2 || balls <= 1, ErrorKind::kDivergent,
          "divergent duration: n = 1 with r >= 2 never terminates");
  Require(balls <= budget && cells <= budget, ErrorKind::kBudget,
          "simulation size exceeds the budget of " + std::to_string(budget));
}

void Summarize(SimBatch& batch) {
  mpz_class sum = 0, sumSq = 0;
  for (std::int64_t d : batch.durations) {
    ++batch.histogram[d];
    const mpz_class v(static_cast<long>(d));
    sum += v;
    sumSq += v * v;
  }
  const mpz_class t(static_cast<long>(batch.trials));
  batch.mean = Rational(sum, t);
  batch.variance = batch.trials > 1
                       ? Rational(mpz_class(t * sumSq - sum * sum), mpz_class(t * (t - 1)))
                       : Rational(0);
}

}  // namespace

GameRun SimulateGame(std::int64_t balls, std::int64_t cells, StreamSeed seed, bool recordTrace,
                     std::int64_t ballBudget) {
  CheckGame(balls, cells, ballBudget);
  Pcg32 rng(seed.seed, seed.stream);
  GameRun run;
  std::vector<std::uint32_t> occupancy(static_cast<std::size_t>(cells), 0);
  std::vector<std::uint32_t> assignment;
  std::int64_t remaining = balls;
  const auto bound = static_cast<std::uint32_t>(cells);
  while (remaining > 0) {
    ++run.duration;
    assignment.resize(static_cast<std::size_t>(remaining));
    for (auto& cell : assignment) {
      cell = rng.bounded(bound);
      ++occupancy[cell];
    }
    std::int64_t captured = 0;
    for (auto cell : assignment) captured += (occupancy[cell] == 1);
    for (auto cell : assignment) occupancy[cell] = 0;
    if (recordTrace) {
      run.trace.push_back({static_cast<int>(run.duration), remaining, assignment, captured});
    }
    remaining -= captured;
  }
  return run;
}

SimBatch SimulateBatchSerial(std::int64_t balls, std::int64_t cells, std::int64_t trials,
                             std::uint64_t seed) {
  Require(trials >= 1, ErrorKind::kDomain, "trials must be >= 1");
  CheckGame(balls, cells, kDefaultSimulationBallBudget);
  SimBatch batch{balls, cells, trials, seed, {}, {}, {}, {}};
  batch.durations.resize(static_cast<std::size_t>(trials));
  for (std::int64_t i = 0; i < trials; ++i) {
    batch.durations[static_cast<std::size_t>(i)] =
        SimulateGame(balls, cells, {seed, static_cast<std::uint64_t>(i)}).duration;
  }
  Summarize(batch);
  return batch;
}

SimBatch SimulateBatch(std::int64_t balls, std::int64_t cells, std::int64_t trials,
                       std::uint64_t seed, int threads) {
  Require(trials >= 1, ErrorKind::kDomain, "trials must be >= 1");
  CheckGame(balls, cells, kDefaultSimulationBallBudget);
  SimBatch batch{balls, cells, trials, seed, {}, {}, {}, {}};
  batch.durations.resize(static_cast<std::size_t>(trials));
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(team)
  for (std::int64_t i = 0; i < trials; ++i) {
    batch.durations[static_cast<std::size_t>(i)] =
        SimulateGame(balls, cells, {seed, static_cast<std::uint64_t>(i)}).duration;
  }
  Summarize(batch);
  return batch;
}

GofReport GofCompare(const SimBatch& batch, const DurationLaw& law, double level) {
  Require(batch.balls == law.balls && batch.cells == law.cells, ErrorKind::kMismatch,
          "batch (r=" + std::to_string(batch.balls) + ", n=" + std::to_string(batch.cells) +
              ") does not match the exact law (r=" + std::to_string(law.balls) +
              ", n=" + std::to_string(law.cells) + ")");
  Require(law.tailMass <= Rational(mpz_class(1), mpz_class(1000000000)), ErrorKind::kDomain,
          "exact law leaves more than 1e-9 of the mass uncovered");
  const auto size = static_cast<std::int64_t>(law.probs.size());
  const mpz_class trials(static_cast<long>(batch.trials));
  auto observed = [&](std::int64_t k) -> std::int64_t {
    auto it = batch.histogram.find(k);
    return it == batch.histogram.end() ? 0 : it->second;
  };
  std::int64_t beyond = 0;
  for (const auto& [k, c] : batch.histogram) {
    if (k >= size) beyond += c;
  }

  GofReport rep;
  rep.level = level;
  Rational tv;
  for (std::int64_t k = 0; k < size; ++k) {
    tv += (Rational(mpz_class(static_cast<long>(observed(k))), trials) -
           law.probs[static_cast<std::size_t>(k)]).abs();
  }
  tv += (Rational(mpz_class(static_cast<long>(beyond)), trials) - law.tailMass).abs();
  rep.totalVariation = tv / Rational(2);

  // (observed, expected) per chi-square bin.
  std::vector<std::pair<double, double>> bins;
  double pooledObs = static_cast<double>(beyond);
  double pooledExp = law.tailMass.toDouble() * static_cast<double>(batch.trials);
  for (std::int64_t k = 0; k < size; ++k) {
    const double expected =
        law.probs[static_cast<std::size_t>(k)].toDouble() * static_cast<double>(batch.trials);
    const auto obs = static_cast<double>(observed(k));
    if (expected >= 5.0) {
      bins.emplace_back(obs, expected);
    } else {
      pooledObs += obs;
      pooledExp += expected;
    }
  }
  if (pooledExp >= 5.0 || bins.empty()) {
    bins.emplace_back(pooledObs, pooledExp);
  } else {
    bins.back().first += pooledObs;
    bins.back().second += pooledExp;
  }
  for (const auto& [obs, expected] : bins) {
    if (expected > 0.0) {
      rep.chiSquare += (obs - expected) * (obs - expected) / expected;
    } else if (obs > 0.0) {
      rep.chiSquare = std::numeric_limits<double>::infinity();
    }
  }
  rep.degreesOfFreedom = static_cast<int>(bins.size()) - 1;
  if (rep.degreesOfFreedom >= 1) {
    boost::math::chi_squared dist(rep.degreesOfFreedom);
    rep.criticalValue = boost::math::quantile(dist, level);
    rep.passes = rep.chiSquare < rep.criticalValue;
  } else {
    rep.criticalValue = 0.0;
    rep.passes = rep.chiSquare == 0.0;
  }
  return rep;
}

}  // namespace ballcell
