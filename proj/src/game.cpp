#include "ballcell/game.hpp"

#include <omp.h>

#include <limits>
#include <string>

namespace ballcell {
namespace {

void CheckState(int cells, int balls) {
  Require(cells >= 1, ErrorKind::kDomain, "number of cells must be >= 1");
  Require(balls >= 0, ErrorKind::kDomain, "number of balls must be >= 0");
}

// Falling factorial n(n-1)...(n-j+1) as a polynomial in n.
Poly1 FallingFactorial(int j) {
  Poly1 out(Rational(1));
  for (int i = 0; i < j; ++i) out *= Poly1({Rational(-i), Rational(1)});
  return out;
}

std::uint64_t PlacementCount(int cells, int balls, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int i = 0; i < balls; ++i) {
    if (total > budget / static_cast<std::uint64_t>(cells)) {
      throw Error(ErrorKind::kBudget,
                  "enumerating " + std::to_string(cells) + "^" + std::to_string(balls) +
                      " placements exceeds the budget of " + std::to_string(budget) +
                      "; shrink n or r");
    }
    total *= static_cast<std::uint64_t>(cells);
  }
  return total;
}

// Number of sole occupants for one placement given as base-n digits.
int CountSingletons(const std::vector<int>& digits, std::vector<int>& occupancy) {
  std::fill(occupancy.begin(), occupancy.end(), 0);
  for (int d : digits) ++occupancy[static_cast<std::size_t>(d)];
  int singles = 0;
  for (int c : occupancy) singles += (c == 1);
  return singles;
}

// Tallies singletons for placements [begin, end) into hist.
void EnumerateRange(int cells, int balls, std::uint64_t begin, std::uint64_t end,
                    std::vector<std::uint64_t>& hist) {
  std::vector<int> digits(static_cast<std::size_t>(balls));
  std::uint64_t v = begin;
  for (int i = 0; i < balls; ++i) {
    digits[static_cast<std::size_t>(i)] = static_cast<int>(v % static_cast<std::uint64_t>(cells));
    v /= static_cast<std::uint64_t>(cells);
  }
  std::vector<int> occupancy(static_cast<std::size_t>(cells));
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    ++hist[static_cast<std::size_t>(CountSingletons(digits, occupancy))];
    for (int i = 0; i < balls; ++i) {  // odometer increment
      auto& d = digits[static_cast<std::size_t>(i)];
      if (++d < cells) break;
      d = 0;
    }
  }
}

TransitionRow RowFromHistogram(int cells, int balls, const std::vector<std::uint64_t>& hist,
                               std::uint64_t total) {
  TransitionRow row{{balls, cells}, {}};
  const mpz_class denom(std::to_string(total));
  for (std::uint64_t h : hist) row.probs.emplace_back(mpz_class(std::to_string(h)), denom);
  return row;
}

}  // namespace

std::vector<mpz_class> CaptureCounts(int cells, int balls) {
  CheckState(cells, balls);
  const int top = std::min(cells, balls);
  // b[j] = C(n,j) C(r,j) j! (n-j)^(r-j): placements with a marked set of j
  // singleton balls in j distinct cells and the rest avoiding those cells.
  std::vector<mpz_class> b(static_cast<std::size_t>(top) + 1);
  for (int j = 0; j <= top; ++j) {
    b[static_cast<std::size_t>(j)] = Binomial(cells, j) * Binomial(balls, j) * Factorial(j) *
                                     IntPow(cells - j, static_cast<unsigned long>(balls - j));
  }
  std::vector<mpz_class> counts(static_cast<std::size_t>(balls) + 1, 0);
  for (int t = 0; t <= top; ++t) {
    mpz_class acc = 0;
    for (int j = t; j <= top; ++j) {
      const mpz_class term = Binomial(j, t) * b[static_cast<std::size_t>(j)];
      if ((j - t) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    counts[static_cast<std::size_t>(t)] = acc;
  }
  return counts;
}

TransitionRow ComputeTransitionRow(int cells, int balls) {
  const auto counts = CaptureCounts(cells, balls);
  const mpz_class total = IntPow(cells, static_cast<unsigned long>(balls));
  TransitionRow row{{balls, cells}, {}};
  row.probs.reserve(counts.size());
  for (const auto& c : counts) row.probs.emplace_back(c, total);
  return row;
}

Rational TransitionProb(int cells, int balls, int captured) {
  CheckState(cells, balls);
  Require(captured >= 0 && captured <= balls, ErrorKind::kDomain,
          "captured count must lie in 0..r");
  return ComputeTransitionRow(cells, balls).probs[static_cast<std::size_t>(captured)];
}

std::vector<Poly1> CaptureCountsSymbolic(int balls) {
  Require(balls >= 0, ErrorKind::kDomain, "number of balls must be >= 0");
  const Poly1 n = Poly1::Variable();
  std::vector<Poly1> b(static_cast<std::size_t>(balls) + 1);
  for (int j = 0; j <= balls; ++j) {
    const Poly1 rest = (n - Poly1(Rational(j))).pow(balls - j);
    b[static_cast<std::size_t>(j)] =
        FallingFactorial(j) * rest * Poly1(Rational(Binomial(balls, j)));
  }
  std::vector<Poly1> counts(static_cast<std::size_t>(balls) + 1);
  for (int t = 0; t <= balls; ++t) {
    Poly1 acc;
    for (int j = t; j <= balls; ++j) {
      const Poly1 term = b[static_cast<std::size_t>(j)].scaled(Rational(Binomial(j, t)));
      if ((j - t) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    counts[static_cast<std::size_t>(t)] = std::move(acc);
  }
  return counts;
}

RatFunc1 TransitionProbSymbolic(int balls, int captured) {
  Require(balls >= 0, ErrorKind::kDomain, "number of balls must be >= 0");
  Require(captured >= 0 && captured <= balls, ErrorKind::kDomain,
          "captured count must lie in 0..r");
  const auto counts = CaptureCountsSymbolic(balls);
  return RatFunc1(counts[static_cast<std::size_t>(captured)],
                  Poly1::Variable().pow(balls));
}

TransitionRow BruteForceRowSerial(int cells, int balls, std::uint64_t budget) {
  CheckState(cells, balls);
  const std::uint64_t total = PlacementCount(cells, balls, budget);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(balls) + 1, 0);
  EnumerateRange(cells, balls, 0, total, hist);
  return RowFromHistogram(cells, balls, hist, total);
}

TransitionRow BruteForceRow(int cells, int balls, std::uint64_t budget) {
  CheckState(cells, balls);
  const std::uint64_t total = PlacementCount(cells, balls, budget);
  const auto width = static_cast<std::size_t>(balls) + 1;
  std::vector<std::uint64_t> hist(width, 0);
  constexpr std::uint64_t kBlock = 1 << 14;
  const auto blocks = static_cast<std::int64_t>((total + kBlock - 1) / kBlock);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(width, 0);
#pragma omp for schedule(static)
    for (std::int64_t b = 0; b < blocks; ++b) {
      const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
      EnumerateRange(cells, balls, begin, std::min(total, begin + kBlock), local);
    }
#pragma omp critical
    for (std::size_t t = 0; t < width; ++t) hist[t] += local[t];
  }
  return RowFromHistogram(cells, balls, hist, total);
}

}  // namespace ballcell
