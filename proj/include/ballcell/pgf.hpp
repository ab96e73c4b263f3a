#pragma once

#include <optional>
#include <vector>

#include "ballcell/big_decimal.hpp"
#include "ballcell/rational_function.hpp"

namespace ballcell {

/// Default guard on symbolic PGF construction (bivariate coefficient growth).
inline constexpr int kDefaultSymbolicCeiling = 40;

/// Probability generating function of the game duration, F_{r,n}(x).
/// P = Poly1 for a numeric cell count, Poly2 for F as a function of n and x.
template <class P>
struct DurationPGF {
  int balls = 0;
  std::optional<int> cells;  // nullopt on the symbolic path
  RationalFunction<P> func;
  /// False only for n = 1, r >= 2, where func is identically zero.
  bool terminates = true;
  /// Factors n^(j-1) - n^(j-1) P_{j,j}(n) x (j = 2..r) whose product is a
  /// constant multiple of func's denominator; empty when not tracked.
  std::vector<P> denominatorFactors;
};

using NumericPGF = DurationPGF<Poly1>;
using SymbolicPGF = DurationPGF<Poly2>;

/// Memoized bottom-up evaluation of
///   F_r(x) = x / (1 - P_{r,r} x) * sum_{t=1}^{r} P_{r,r-t} F_{r-t}(x),  F_0 = 1,
/// for one context (one numeric n, or symbolic n). Not thread-safe; build
/// independent tables for concurrent use.
template <class P>
class PgfTable {
 public:
  /// cells is required for P = Poly1 and must be nullopt for P = Poly2.
  explicit PgfTable(std::optional<int> cells);

  /// F_{r,n}. Throws Error(kBudget) beyond `ceiling` balls.
  DurationPGF<P> get(int balls, int ceiling = kDefaultSymbolicCeiling);

 private:
  using K = typename P::Coefficient;
  void extendTo(int balls);

  std::optional<int> cells_;
  // F_k = numerators_[k] / prod_{j<=k} factors_[j]; factors_[0] = factors_[1] = 1.
  std::vector<P> numerators_;
  std::vector<P> factors_;
  std::vector<bool> factorIrreducible_;
};

NumericPGF PgfNumeric(int balls, int cells);
SymbolicPGF PgfSymbolic(int balls, int ceiling = kDefaultSymbolicCeiling);

/// Pr[duration = k] for k = 0..kmax by powering the (r+1)-state transition
/// matrix; independent of the PGF recurrence.
std::vector<Rational> DurationDistribution(int balls, int cells, int kmax);

/// Truncated exact duration law covering all but `maxTail` of the mass.
struct DurationLaw {
  int balls = 0;
  int cells = 0;
  std::vector<Rational> probs;  // index = duration
  Rational tailMass;            // 1 - sum(probs)
};
DurationLaw DurationLawCovering(int balls, int cells, const Rational& maxTail);

/// A standardized moment m_i / m_2^(i/2). Odd orders leave the rationals, so
/// the exact content is the square m_i^2 / m_2^i plus the sign of m_i.
template <class S>
struct ScaledMoment {
  int order = 0;
  S squared{};
  std::optional<S> exact;           // even orders only
  int sign = 0;                     // numeric path only; 0 when unknown
  std::optional<BigDecimal> value;  // numeric path only
};

/// Raw, central and scaled moments of a duration. S is Rational on the
/// numeric path and a rational function of n (RatFunc1) on the symbolic path.
template <class S>
struct MomentReport {
  int order = 0;
  S mean{};
  S variance{};
  std::vector<S> raw;      // raw[i-1] = E[X^i], i = 1..order
  std::vector<S> central;  // central[i-2] = m_i, i = 2..order
  bool scaledDefined = false;
  std::vector<ScaledMoment<S>> scaled;  // scaled[i-3], i = 3..order

  const S& rawMoment(int i) const { return raw.at(static_cast<std::size_t>(i - 1)); }
  const S& centralMoment(int i) const { return central.at(static_cast<std::size_t>(i - 2)); }
  const ScaledMoment<S>& scaledMoment(int i) const {
    return scaled.at(static_cast<std::size_t>(i - 3));
  }
};

/// Moments of any PGF given as a rational function of x with F(1) defined.
MomentReport<Rational> MomentsOf(const RatFunc1& pgf, int order,
                                 int precision = kDefaultPrecision);
/// Moments of a bivariate PGF in x, as rational functions of n.
MomentReport<RatFunc1> MomentsOf(const RatFunc2& pgf, int order);

/// Throws Error(kDivergent) for non-terminating configurations.
MomentReport<Rational> Moments(int balls, int cells, int order,
                               int precision = kDefaultPrecision);
MomentReport<RatFunc1> MomentsSymbolic(int balls, int order,
                                       int ceiling = kDefaultSymbolicCeiling);

struct MeanVariance {
  Rational mean;
  Rational variance;
};

/// M_n(r) and Var_n(r) for r = 0..maxBalls from the recurrences obtained by
/// differentiating the PGF recurrence at x = 1; no rational functions are
/// built. Throws Error(kDivergent) for n = 1, maxBalls >= 2.
std::vector<MeanVariance> MeanVarianceTable(int cells, int maxBalls);
/// Means only; cheaper than MeanVarianceTable.
std::vector<Rational> MeanTable(int cells, int maxBalls);
/// Means in decimal arithmetic at the given working precision.
std::vector<BigDecimal> MeanTableDecimal(int cells, int maxBalls, int precision);

Rational MeanFast(int balls, int cells);
Rational VarianceFast(int balls, int cells);

struct DiagonalEntry {
  int balls = 0;  // r = n
  Rational mean;
  Rational variance;
};

/// (r, M_r(r), Var_r(r)) for r = 1..rmax; OpenMP-parallel over r.
std::vector<DiagonalEntry> DiagonalSequence(int rmax);
/// Single-threaded reference for DiagonalSequence.
std::vector<DiagonalEntry> DiagonalSequenceSerial(int rmax);

}  // namespace ballcell
