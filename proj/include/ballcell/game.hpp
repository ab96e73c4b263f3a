#pragma once

#include <cstdint>
#include <vector>

#include "ballcell/rational_function.hpp"

namespace ballcell {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// r balls about to be thrown into n cells.
struct GameState {
  int balls = 0;
  int cells = 1;
};

/// One-round transition law out of a state: probs[t] is the probability
/// that exactly t balls are captured (end up alone in their cell).
struct TransitionRow {
  GameState state;
  std::vector<Rational> probs;
};

/// Number of the n^r equally likely placements in which exactly t balls are
/// sole occupants, for t = 0..r. Inclusion-exclusion over the set of
/// singleton cells:
///   count[t] = sum_{j=t}^{min(n,r)} (-1)^(j-t) C(j,t) C(n,j) C(r,j) j! (n-j)^(r-j)
/// with 0^0 = 1.
std::vector<mpz_class> CaptureCounts(int cells, int balls);

/// The exact transition row for (n, r): CaptureCounts / n^r.
TransitionRow ComputeTransitionRow(int cells, int balls);

/// P_{r,r-t}(n): probability that a round with r balls and n cells captures
/// exactly t of them. Throws Error(kDomain) unless n >= 1 and 0 <= t <= r.
Rational TransitionProb(int cells, int balls, int captured);

/// Capture counts as polynomials in n (same sum with the upper limit r and
/// C(n,j) j! written as the falling factorial n(n-1)...(n-j+1)).
std::vector<Poly1> CaptureCountsSymbolic(int balls);

/// P_{r,r-t}(n) as a rational function of n: CaptureCountsSymbolic[t] / n^r.
RatFunc1 TransitionProbSymbolic(int balls, int captured);

/// Transition row by enumerating all n^r placements; independent of the
/// inclusion-exclusion formula. OpenMP-parallel over placement blocks.
/// Throws Error(kBudget) when n^r exceeds `budget`.
TransitionRow BruteForceRow(int cells, int balls,
                            std::uint64_t budget = kDefaultEnumerationBudget);

/// Single-threaded reference for BruteForceRow.
TransitionRow BruteForceRowSerial(int cells, int balls,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace ballcell
