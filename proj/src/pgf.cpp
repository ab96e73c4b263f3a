#include "ballcell/pgf.hpp"

#include <omp.h>

#include <string>
#include <type_traits>

#include "ballcell/game.hpp"

namespace ballcell {
namespace {

template <class K>
bool CoefficientIsZero(const K& k) {
  return IsZero(k);
}

template <class P>
P MulConst(const P& p, const typename P::Coefficient& k) {
  if constexpr (std::is_same_v<P, Poly1>) {
    return p.scaled(k);
  } else {
    return p * P(k);
  }
}

// Per-round inputs: w[t] = (number of placements capturing t balls) / n,
// and n^(r-1). Then P_{r,r-t} = w[t] / n^(r-1).
template <class P>
void RoundWeights(std::optional<int> cells, int r, std::vector<typename P::Coefficient>& w,
                  typename P::Coefficient& nPow) {
  if constexpr (std::is_same_v<P, Poly1>) {
    const int n = *cells;
    const auto counts = CaptureCounts(n, r);
    w.clear();
    for (const auto& c : counts) w.emplace_back(c, mpz_class(n));
    nPow = Rational(IntPow(n, static_cast<unsigned long>(r - 1)));
  } else {
    const auto counts = CaptureCountsSymbolic(r);
    w.clear();
    for (const auto& q : counts) {
      // Every placement count is a multiple of n for r >= 1.
      Require(q.coeff(0).isZero(), ErrorKind::kDomain, "capture count not divisible by n");
      std::vector<Rational> shifted(q.coeffs().begin() + (q.isZero() ? 0 : 1), q.coeffs().end());
      w.emplace_back(std::move(shifted));
    }
    nPow = Poly1::Monomial(Rational(1), r - 1);
  }
}

template <class K>
bool ConstantTermNonzero(const K& k) {
  if constexpr (std::is_same_v<K, Rational>) {
    return !k.isZero();
  } else {
    return !k.coeff(0).isZero();
  }
}

}  // namespace

template <class P>
PgfTable<P>::PgfTable(std::optional<int> cells) : cells_(cells) {
  if constexpr (std::is_same_v<P, Poly1>) {
    Require(cells.has_value() && *cells >= 1, ErrorKind::kDomain,
            "number of cells must be >= 1");
  } else {
    Require(!cells.has_value(), ErrorKind::kDomain, "symbolic table takes no cell count");
  }
  const P one(K(Rational(1)));
  numerators_ = {one};
  factors_ = {one};
  factorIrreducible_ = {true};
}

template <class P>
void PgfTable<P>::extendTo(int balls) {
  std::vector<K> w;
  K nPow{};
  const P one(K(Rational(1)));
  for (int r = static_cast<int>(numerators_.size()); r <= balls; ++r) {
    RoundWeights<P>(cells_, r, w, nPow);
    // 1 - P_{r,r} x = f_r / n^(r-1) with f_r = n^(r-1) - w[0] x.
    P f(std::vector<K>{nPow, -w[0]});
    // f_r is linear in x; it is irreducible once its content in Q[n] is trivial.
    const bool irreducible =
        f.degree() == 0 || ConstantTermNonzero(w[0]) || std::is_same_v<P, Poly1>;
    P sum;
    P cofactor = one;  // prod_{j=r-t+1}^{r-1} f_j
    for (int t = 1; t <= r; ++t) {
      const P& lower = numerators_[static_cast<std::size_t>(r - t)];
      if (!CoefficientIsZero(w[static_cast<std::size_t>(t)]) && !lower.isZero()) {
        sum += MulConst(lower * cofactor, w[static_cast<std::size_t>(t)]);
      }
      if (t < r) cofactor *= factors_[static_cast<std::size_t>(r - t)];
    }
    numerators_.push_back(sum.shifted(1));
    factors_.push_back(r == 1 ? one : f);
    factorIrreducible_.push_back(irreducible);
  }
}

template <class P>
DurationPGF<P> PgfTable<P>::get(int balls, int ceiling) {
  Require(balls >= 0, ErrorKind::kDomain, "number of balls must be >= 0");
  if constexpr (std::is_same_v<P, Poly2>) {
    Require(balls <= ceiling, ErrorKind::kBudget,
            "symbolic PGF for r = " + std::to_string(balls) + " exceeds the ceiling r <= " +
                std::to_string(ceiling));
  }
  extendTo(balls);
  DurationPGF<P> out;
  out.balls = balls;
  out.cells = cells_;
  P num = numerators_[static_cast<std::size_t>(balls)];
  if (num.isZero()) {
    out.terminates = false;
    return out;
  }
  P den(K(Rational(1)));
  bool allIrreducible = true;
  std::vector<P> factors;
  for (int j = 2; j <= balls; ++j) {
    den *= factors_[static_cast<std::size_t>(j)];
    factors.push_back(factors_[static_cast<std::size_t>(j)]);
    allIrreducible = allIrreducible && factorIrreducible_[static_cast<std::size_t>(j)];
  }
  if (!allIrreducible) {
    out.func = RationalFunction<P>(std::move(num), std::move(den));
    return out;
  }
  // With every factor irreducible, gcd(num, den) is the product of the
  // factors that divide num.
  std::vector<P> kept;
  for (P& f : factors) {
    if (auto q = TryDivideExact(num, f)) {
      num = *std::move(q);
      den = DivideExact(den, f);
    } else {
      kept.push_back(std::move(f));
    }
  }
  out.func = RationalFunction<P>::FromCoprime(std::move(num), std::move(den));
  out.denominatorFactors = std::move(kept);
  return out;
}

template class PgfTable<Poly1>;
template class PgfTable<Poly2>;

NumericPGF PgfNumeric(int balls, int cells) { return PgfTable<Poly1>(cells).get(balls); }

SymbolicPGF PgfSymbolic(int balls, int ceiling) {
  return PgfTable<Poly2>(std::nullopt).get(balls, ceiling);
}

std::vector<Rational> DurationDistribution(int balls, int cells, int kmax) {
  Require(cells >= 1 && balls >= 0 && kmax >= 0, ErrorKind::kDomain,
          "need n >= 1, r >= 0, kmax >= 0");
  std::vector<std::vector<Rational>> rows;
  for (int s = 0; s <= balls; ++s) rows.push_back(ComputeTransitionRow(cells, s).probs);
  // state[s] = Pr[s balls remain after k rounds]
  std::vector<Rational> state(static_cast<std::size_t>(balls) + 1);
  state[static_cast<std::size_t>(balls)] = Rational(1);
  std::vector<Rational> dist(static_cast<std::size_t>(kmax) + 1);
  Rational absorbed = state[0];
  dist[0] = absorbed;
  for (int k = 1; k <= kmax; ++k) {
    std::vector<Rational> next(state.size());
    for (int s = 1; s <= balls; ++s) {
      const Rational& mass = state[static_cast<std::size_t>(s)];
      if (mass.isZero()) continue;
      const auto& row = rows[static_cast<std::size_t>(s)];
      for (int t = 0; t <= s; ++t) {
        if (!row[static_cast<std::size_t>(t)].isZero()) {
          next[static_cast<std::size_t>(s - t)] += mass * row[static_cast<std::size_t>(t)];
        }
      }
    }
    next[0] += state[0];
    state = std::move(next);
    dist[static_cast<std::size_t>(k)] = state[0] - absorbed;
    absorbed = state[0];
  }
  return dist;
}

DurationLaw DurationLawCovering(int balls, int cells, const Rational& maxTail) {
  const NumericPGF pgf = PgfNumeric(balls, cells);
  Require(pgf.terminates, ErrorKind::kDivergent, "divergent duration: n = 1 with r >= 2");
  for (int kmax = 32;; kmax *= 2) {
    DurationLaw law{balls, cells, SeriesExpand(pgf.func, kmax), Rational(1)};
    for (const auto& p : law.probs) law.tailMass -= p;
    if (law.tailMass <= maxTail) {
      while (law.probs.size() > 1 && law.probs.back().isZero()) law.probs.pop_back();
      return law;
    }
    Require(kmax < (1 << 16), ErrorKind::kBudget, "duration law needs too many terms");
  }
}

// ---------------------------------------------------------------------------
// Moments.

namespace {

Rational Pow(const Rational& q, int e) { return q.pow(e); }
RatFunc1 Pow(const RatFunc1& f, int e) { return f.pow(e); }

// S(i, j), Stirling numbers of the second kind, 0 <= j <= i <= order.
std::vector<std::vector<Rational>> StirlingSecond(int order) {
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(order) + 1,
                                       std::vector<Rational>(static_cast<std::size_t>(order) + 1));
  s[0][0] = Rational(1);
  for (int i = 1; i <= order; ++i) {
    for (int j = 1; j <= i; ++j) {
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          Rational(j) * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
          s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
  }
  return s;
}

// Taylor coefficients of p around x = 1: p(1 + h) = sum_j a_j h^j.
template <class P>
std::vector<typename P::Coefficient> TaylorAtOne(const P& p, int order) {
  using K = typename P::Coefficient;
  std::vector<K> a(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) {
    K acc{};
    for (int m = j; m <= p.degree(); ++m) {
      const K& c = p.coeff(m);
      if (IsZero(c)) continue;
      if constexpr (std::is_same_v<K, Rational>) {
        acc += c * Rational(Binomial(m, j));
      } else {
        acc += c.scaled(Rational(Binomial(m, j)));
      }
    }
    a[static_cast<std::size_t>(j)] = std::move(acc);
  }
  return a;
}

Rational MakeFraction(const Rational& num, const Rational& den) { return num / den; }
RatFunc1 MakeFraction(const Poly1& num, const Poly1& den) { return RatFunc1(num, den); }

// Factorial moments E[X(X-1)...(X-j+1)] = F^{(j)}(1), j = 0..order, as
// field elements. Works on the power series of F(1 + h) with coefficients
// g_j = f_j d0^(j+1) kept in the coefficient ring until one final division.
template <class P>
auto FactorialMoments(const RationalFunction<P>& f, int order) {
  using K = typename P::Coefficient;
  const auto a = TaylorAtOne(f.num(), order);
  const auto d = TaylorAtOne(f.den(), order);
  const K& d0 = d[0];
  Require(!IsZero(d0), ErrorKind::kPole, "generating function has a pole at x = 1");
  std::vector<K> d0pow(static_cast<std::size_t>(order) + 2, K(Rational(1)));
  for (std::size_t i = 1; i < d0pow.size(); ++i) d0pow[i] = d0pow[i - 1] * d0;
  std::vector<K> g(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) {
    K acc = a[static_cast<std::size_t>(j)] * d0pow[static_cast<std::size_t>(j)];
    for (int i = 1; i <= j; ++i) {
      const K& di = d[static_cast<std::size_t>(i)];
      if (IsZero(di)) continue;
      acc = acc - di * g[static_cast<std::size_t>(j - i)] * d0pow[static_cast<std::size_t>(i - 1)];
    }
    g[static_cast<std::size_t>(j)] = std::move(acc);
  }
  using S = decltype(MakeFraction(g[0], d0));
  std::vector<S> out;
  mpz_class fact = 1;
  for (int j = 0; j <= order; ++j) {
    if (j > 0) fact *= j;
    out.push_back(MakeFraction(g[static_cast<std::size_t>(j)] * K(Rational(fact)),
                               d0pow[static_cast<std::size_t>(j) + 1]));
  }
  return out;
}

template <class S>
MomentReport<S> BuildReport(const std::vector<S>& factorial, int order) {
  const int work = std::max(order, 2);
  const auto stirling = StirlingSecond(work);
  MomentReport<S> report;
  report.order = order;
  std::vector<S> raw(static_cast<std::size_t>(work) + 1);
  raw[0] = factorial[0];
  for (int i = 1; i <= work; ++i) {
    S acc{};
    for (int j = 1; j <= i; ++j) {
      const Rational& s = stirling[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      acc = acc + S(s) * factorial[static_cast<std::size_t>(j)];
    }
    raw[static_cast<std::size_t>(i)] = acc;
  }
  const S mean = raw[1];
  report.mean = mean;
  report.variance = raw[2] - mean * mean;
  for (int i = 1; i <= order; ++i) report.raw.push_back(raw[static_cast<std::size_t>(i)]);
  // m_i = sum_k C(i,k) E[X^k] (-mean)^(i-k), with E[X^0] = 1.
  std::vector<S> negMeanPow(static_cast<std::size_t>(order) + 1, S(Rational(1)));
  for (int i = 1; i <= order; ++i) {
    negMeanPow[static_cast<std::size_t>(i)] = negMeanPow[static_cast<std::size_t>(i - 1)] * (-mean);
  }
  for (int i = 2; i <= order; ++i) {
    S acc = negMeanPow[static_cast<std::size_t>(i)];
    for (int k = 1; k <= i; ++k) {
      acc = acc + S(Rational(Binomial(i, k))) * raw[static_cast<std::size_t>(k)] *
                      negMeanPow[static_cast<std::size_t>(i - k)];
    }
    report.central.push_back(acc);
  }
  const S m2 = report.variance;
  report.scaledDefined = !m2.isZero();
  if (report.scaledDefined) {
    for (int i = 3; i <= order; ++i) {
      ScaledMoment<S> sm;
      sm.order = i;
      const S& mi = report.central[static_cast<std::size_t>(i - 2)];
      sm.squared = Pow(mi, 2) / Pow(m2, i);
      if (i % 2 == 0) sm.exact = mi / Pow(m2, i / 2);
      report.scaled.push_back(std::move(sm));
    }
  }
  return report;
}

}  // namespace

MomentReport<Rational> MomentsOf(const RatFunc1& pgf, int order, int precision) {
  Require(order >= 1, ErrorKind::kDomain, "moment order must be >= 1");
  auto report = BuildReport(FactorialMoments(pgf, std::max(order, 2)), order);
  for (auto& sm : report.scaled) {
    const Rational& mi = report.centralMoment(sm.order);
    sm.sign = mi.sign();
    if (sm.exact) {
      sm.value = BigDecimal(*sm.exact, precision);
    } else {
      BigDecimal root = BigDecimal(sm.squared, precision).sqrt();
      sm.value = sm.sign < 0 ? -root : root;
    }
  }
  return report;
}

MomentReport<RatFunc1> MomentsOf(const RatFunc2& pgf, int order) {
  Require(order >= 1, ErrorKind::kDomain, "moment order must be >= 1");
  return BuildReport(FactorialMoments(pgf, std::max(order, 2)), order);
}

MomentReport<Rational> Moments(int balls, int cells, int order, int precision) {
  const NumericPGF pgf = PgfNumeric(balls, cells);
  Require(pgf.terminates, ErrorKind::kDivergent, "divergent duration: n = 1 with r >= 2");
  return MomentsOf(pgf.func, order, precision);
}

MomentReport<RatFunc1> MomentsSymbolic(int balls, int order, int ceiling) {
  return MomentsOf(PgfSymbolic(balls, ceiling).func, order);
}

// ---------------------------------------------------------------------------
// Fast mean / variance recurrences.
//
// With c_t = n^r P_{r,r-t} and g = n^r - c_0:
//   M_r = (n^r + sum_{t>=1} c_t M_{r-t}) / g
//   S_r = (n^r (2 M_r - 2) + sum_{t>=1} c_t S_{r-t}) / g,   S = F''(1)
// Everything is kept over the common denominator D = prod g (D^2 for S) so
// the inner loop is integer arithmetic only.

namespace {

void CheckFastArgs(int cells, int maxBalls) {
  Require(cells >= 1 && maxBalls >= 0, ErrorKind::kDomain, "need n >= 1 and r >= 0");
  Require(cells >= 2 || maxBalls <= 1, ErrorKind::kDivergent,
          "divergent duration: n = 1 with r >= 2");
}

template <bool kWithVariance>
std::vector<MeanVariance> RunRecurrence(int cells, int maxBalls) {
  CheckFastArgs(cells, maxBalls);
  std::vector<MeanVariance> out(static_cast<std::size_t>(maxBalls) + 1);
  std::vector<mpz_class> a(static_cast<std::size_t>(maxBalls) + 1, 0);  // M_k * D
  std::vector<mpz_class> b(kWithVariance ? a.size() : 0, 0);            // S_k * D^2
  mpz_class denom = 1;
  for (int r = 1; r <= maxBalls; ++r) {
    const auto c = CaptureCounts(cells, r);
    const mpz_class nr = IntPow(cells, static_cast<unsigned long>(r));
    const mpz_class g = nr - c[0];
    const int reach = std::min(cells, r);
    mpz_class alpha = nr * denom;
    for (int t = 1; t <= reach; ++t) alpha += c[static_cast<std::size_t>(t)] * a[static_cast<std::size_t>(r - t)];
    mpz_class beta;
    if constexpr (kWithVariance) {
      mpz_class lower = 0;
      for (int t = 1; t <= reach; ++t) lower += c[static_cast<std::size_t>(t)] * b[static_cast<std::size_t>(r - t)];
      beta = nr * (2 * alpha * denom - 2 * denom * denom * g) + g * lower;
    }
    // Rescale the entries later rounds can still reach (k >= r + 1 - n).
    const mpz_class g2 = g * g;
    for (int k = std::max(0, r + 1 - cells); k < r; ++k) {
      a[static_cast<std::size_t>(k)] *= g;
      if constexpr (kWithVariance) b[static_cast<std::size_t>(k)] *= g2;
    }
    denom *= g;
    a[static_cast<std::size_t>(r)] = alpha;
    auto& entry = out[static_cast<std::size_t>(r)];
    entry.mean = Rational(alpha, denom);
    if constexpr (kWithVariance) {
      b[static_cast<std::size_t>(r)] = beta;
      const Rational second(beta, mpz_class(denom * denom));
      entry.variance = second + entry.mean - entry.mean * entry.mean;
    }
  }
  return out;
}

}  // namespace

std::vector<MeanVariance> MeanVarianceTable(int cells, int maxBalls) {
  return RunRecurrence<true>(cells, maxBalls);
}

std::vector<Rational> MeanTable(int cells, int maxBalls) {
  auto table = RunRecurrence<false>(cells, maxBalls);
  std::vector<Rational> out;
  out.reserve(table.size());
  for (auto& e : table) out.push_back(std::move(e.mean));
  return out;
}

std::vector<BigDecimal> MeanTableDecimal(int cells, int maxBalls, int precision) {
  CheckFastArgs(cells, maxBalls);
  std::vector<BigDecimal> m(static_cast<std::size_t>(maxBalls) + 1, BigDecimal(0, precision));
  for (int r = 1; r <= maxBalls; ++r) {
    const auto c = CaptureCounts(cells, r);
    const mpz_class nr = IntPow(cells, static_cast<unsigned long>(r));
    BigDecimal acc(Rational(nr), precision);
    for (int t = 1; t <= std::min(cells, r); ++t) {
      if (c[static_cast<std::size_t>(t)] == 0) continue;
      acc = acc + BigDecimal(Rational(c[static_cast<std::size_t>(t)]), precision) *
                      m[static_cast<std::size_t>(r - t)];
    }
    m[static_cast<std::size_t>(r)] = acc / BigDecimal(Rational(mpz_class(nr - c[0])), precision);
  }
  return m;
}

Rational MeanFast(int balls, int cells) {
  Require(balls >= 0, ErrorKind::kDomain, "number of balls must be >= 0");
  return MeanTable(cells, balls).back();
}

Rational VarianceFast(int balls, int cells) {
  Require(balls >= 0, ErrorKind::kDomain, "number of balls must be >= 0");
  return MeanVarianceTable(cells, balls).back().variance;
}

std::vector<DiagonalEntry> DiagonalSequenceSerial(int rmax) {
  Require(rmax >= 1, ErrorKind::kDomain, "rmax must be >= 1");
  std::vector<DiagonalEntry> out;
  for (int r = 1; r <= rmax; ++r) {
    auto last = MeanVarianceTable(r, r).back();
    out.push_back({r, std::move(last.mean), std::move(last.variance)});
  }
  return out;
}

std::vector<DiagonalEntry> DiagonalSequence(int rmax) {
  Require(rmax >= 1, ErrorKind::kDomain, "rmax must be >= 1");
  std::vector<DiagonalEntry> out(static_cast<std::size_t>(rmax));
  // Largest r first: cost grows roughly like r^3.
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < rmax; ++i) {
    const int r = rmax - i;
    auto last = MeanVarianceTable(r, r).back();
    out[static_cast<std::size_t>(r - 1)] = {r, std::move(last.mean), std::move(last.variance)};
  }
  return out;
}

}  // namespace ballcell
