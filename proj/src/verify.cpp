#include "ballcell/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "ballcell/approx.hpp"
#include "ballcell/error.hpp"
#include "ballcell/game.hpp"
#include "ballcell/geometric.hpp"
#include "ballcell/montecarlo.hpp"
#include "ballcell/parse.hpp"
#include "ballcell/pgf.hpp"
#include "ballcell/render.hpp"

namespace ballcell {
namespace {

struct Display {
  const char* name;
  const char* text;
};

// Printed closed forms, transcribed into the parser's syntax.
constexpr Display kDiagonalPgfs[] = {
    {"F_{1,1}(x)", "x"},
    {"F_{2,2}(x)", "-x/(-2+x)"},
    {"F_{3,3}(x)", "2x(5x+3)/((-3+x)(-9+x))"},
    {"F_{4,4}(x)", "-3x(25x^2+316x+64)/((-4+x)(-16+x)(-32+5x))"},
    {"F_{5,5}(x)",
     "24x(767x^3+63115x^2+182125x+15625)/((-5+x)(-25+x)(-125+13x)(-625+41x))"},
};

constexpr Display kSymbolicPgfs[] = {
    {"F_{1,n}(x)", "x"},
    {"F_{2,n}(x)", "x(n-1)/(n-x)"},
    {"F_{3,n}(x)", "x(n^3+2n^2x-3n^2-3nx+2n+x)/((n-x)(n^2-x))"},
    {"F_{4,n}(x)",
     "x(n^6+5n^5x-6n^5-15n^4x+3n^3x^2+11n^4+9n^3x-2n^2x^2-6n^3+3n^2x-3nx^2-2nx+2x^2)"
     "/((n-x)(n^2-x)(n^3-3nx+2x))"},
    {"F_{5,n}(x)",
     "x/((n-x)(n^2-x)(n^3-3nx+2x)(n^4-10nx+9x))"
     "*(n^10+9n^9x-10n^9-39n^8x+59n^7x^2+35n^8-13n^7x-284n^6x^2+12n^5x^3"
     "-50n^7+280n^6x+508n^5x^2-38n^4x^3+24n^6-494n^5x"
     "-415n^4x^2+35n^3x^3+359n^4x+111n^3x^2+20n^2x^3-102n^3x+39n^2x^2-47nx^3-18nx^2+18x^3)"},
};

constexpr Display kMeans[] = {
    {"M_n(1)", "1"},
    {"M_n(2)", "n/(n-1)"},
    {"M_n(3)", "n(n+3)/(n^2-1)"},
    {"M_n(4)", "(n^2+7n-2)n^2/((n^3-3n+2)(n+1))"},
    {"M_n(5)", "n^2(n^5+12n^4-6n^3+48n^2-125n+10)/((n^4-10n+9)(n^2+n-2)(n+1))"},
};

class Suite {
 public:
  void check(std::string name, const std::function<std::string()>& body) {
    CheckResult res{std::move(name), true, {}};
    try {
      res.detail = body();
      res.passed = res.detail.empty() || res.detail.rfind("ok", 0) == 0;
    } catch (const Error& e) {
      res.passed = false;
      res.detail = std::string(ToString(e.kind())) + ": " + e.what();
    }
    results_.push_back(std::move(res));
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::string Mismatch(const std::string& got, const std::string& want) {
  return "got " + got + ", expected " + want;
}

std::vector<CheckResult> PublishedFormsSuite() {
  Suite s;
  for (int r = 1; r <= 5; ++r) {
    const auto& d = kDiagonalPgfs[r - 1];
    s.check(d.name, [&] {
      const RatFunc1 want = ParseRatFunc1(d.text, 'x');
      const RatFunc1 got = PgfNumeric(r, r).func;
      return CrossEqual(got, want) ? "ok " + ToText(got) : Mismatch(ToText(got), ToText(want));
    });
  }
  for (int r = 1; r <= 5; ++r) {
    const auto& d = kSymbolicPgfs[r - 1];
    s.check(d.name, [&] {
      const RatFunc2 want = ParseRatFunc2(d.text);
      const RatFunc2 got = PgfSymbolic(r).func;
      return CrossEqual(got, want) ? std::string("ok") : Mismatch(ToText(got), ToText(want));
    });
  }
  for (int r = 1; r <= 5; ++r) {
    const auto& d = kMeans[r - 1];
    s.check(d.name, [&] {
      const RatFunc1 want = ParseRatFunc1(d.text, 'n');
      const RatFunc1 got = MomentsSymbolic(r, 1).mean;
      return CrossEqual(got, want) ? "ok " + ToText(got, "n")
                                   : Mismatch(ToText(got, "n"), ToText(want, "n"));
    });
  }
  s.check("E_2(r) = 0, r <= 50", [] {
    const auto table = ErrorTable(2, 50);
    for (std::size_t r = 0; r < table.size(); ++r) {
      if (!table[r].isZero()) return "E_2(" + std::to_string(r) + ") = " + table[r].str();
    }
    return std::string("ok");
  });
  return s.take();
}

std::vector<CheckResult> OracleSuite(VerifyBudget budget) {
  Suite s;
  const int top = budget == VerifyBudget::kFull ? 6 : 5;
  s.check("transition rows vs enumeration, n,r <= " + std::to_string(top), [&] {
    for (int n = 1; n <= top; ++n) {
      for (int r = 0; r <= top; ++r) {
        if (ComputeTransitionRow(n, r).probs != BruteForceRow(n, r).probs) {
          return "row differs at n=" + std::to_string(n) + ", r=" + std::to_string(r);
        }
      }
    }
    return std::string("ok");
  });
  s.check("Maclaurin coefficients vs matrix powering to order 25, n,r <= " +
              std::to_string(top),
          [&] {
            for (int n = 1; n <= top; ++n) {
              for (int r = 0; r <= top; ++r) {
                const auto pgf = PgfNumeric(r, n);
                const auto series = SeriesExpand(pgf.func, 25);
                if (series != DurationDistribution(r, n, 25)) {
                  return "distribution differs at n=" + std::to_string(n) +
                         ", r=" + std::to_string(r);
                }
              }
            }
            return std::string("ok");
          });
  const int symTop = budget == VerifyBudget::kFull ? 8 : 6;
  s.check("symbolic PGF at n = 2..8 vs numeric PGF, r <= " + std::to_string(symTop), [&] {
    for (int r = 0; r <= symTop; ++r) {
      const auto sym = PgfSymbolic(r);
      for (int n = 2; n <= 8; ++n) {
        if (!(SubstituteN(sym.func, Rational(n)) == PgfNumeric(r, n).func)) {
          return "paths differ at n=" + std::to_string(n) + ", r=" + std::to_string(r);
        }
      }
    }
    return std::string("ok");
  });
  s.check("symbolic transition law at n = 1..8 vs numeric, r <= 6", [] {
    for (int r = 0; r <= 6; ++r) {
      for (int t = 0; t <= r; ++t) {
        const RatFunc1 sym = TransitionProbSymbolic(r, t);
        for (int n = 1; n <= 8; ++n) {
          if (Evaluate(sym, Rational(n)) != TransitionProb(n, r, t)) {
            return "differs at n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                   ", t=" + std::to_string(t);
          }
        }
      }
    }
    return std::string("ok");
  });
  s.check("fast mean/variance vs PGF moments, r,n <= 8", [] {
    for (int n = 2; n <= 8; ++n) {
      const auto table = MeanVarianceTable(n, 8);
      for (int r = 0; r <= 8; ++r) {
        const auto m = Moments(r, n, 2);
        if (m.mean != table[static_cast<std::size_t>(r)].mean ||
            m.variance != table[static_cast<std::size_t>(r)].variance) {
          return "differs at n=" + std::to_string(n) + ", r=" + std::to_string(r);
        }
      }
    }
    return std::string("ok");
  });
  return s.take();
}

struct PublishedLimit {
  int cells;
  const char* value;
  const char* tolerance;
};
constexpr PublishedLimit kLimits[] = {
    {3, "0.04213658385", "1e-8"},
    {4, "0.254461", "1e-4"},
    {5, "0.5312", "1e-3"},
};

std::vector<CheckResult> LimitsSuite(VerifyBudget budget) {
  Suite s;
  const bool full = budget == VerifyBudget::kFull;
  for (const auto& lim : kLimits) {
    s.check("lim E_" + std::to_string(lim.cells) + "(r) ~ " + lim.value, [&] {
      const auto est = ErrorLimitEstimate(lim.cells);
      const BigDecimal diff = (est.value - BigDecimal::Parse(lim.value)).abs();
      const std::string detail = "estimate " + est.value.fixed(12) + " at r=" +
                                 std::to_string(est.balls) + ", gap " + est.gap.str();
      return diff <= BigDecimal::Parse(lim.tolerance) ? "ok " + detail : detail;
    });
  }
  const int e2Top = full ? 200 : 50;
  s.check("E_2(r) = 0, r <= " + std::to_string(e2Top), [&] {
    const auto table = ErrorTable(2, e2Top);
    for (std::size_t r = 0; r < table.size(); ++r) {
      if (!table[r].isZero()) return "E_2(" + std::to_string(r) + ") = " + table[r].str();
    }
    return std::string("ok");
  });
  s.check("|E_n(r)| < 1 for n = 3..6, r <= 5n", [] {
    for (int n = 3; n <= 6; ++n) {
      const auto table = ErrorTable(n, 5 * n);
      for (std::size_t r = 0; r < table.size(); ++r) {
        if (table[r].abs() >= Rational(1)) {
          return "E_" + std::to_string(n) + "(" + std::to_string(r) + ") = " + table[r].str();
        }
      }
    }
    return std::string("ok");
  });
  const int geoTop = full ? 30 : 12;
  s.check("alpha^i closed forms vs sums, r <= " + std::to_string(geoTop), [&] {
    for (const char* a : {"1/2", "1/3", "3/4"}) {
      const Rational alpha = Rational::Parse(a);
      const auto seq = StepSequence::PowerLaw(alpha);
      for (int r = 0; r <= geoTop; ++r) {
        const auto closed = GeoAlphaClosedForms(alpha, r);
        if (closed.mean != GeoMean(r, seq) || closed.variance != GeoVariance(r, seq)) {
          return std::string("differs at alpha=") + a + ", r=" + std::to_string(r);
        }
      }
    }
    return std::string("ok");
  });
  s.check("ball-cell step sums vs approximation, n = 3..5, r <= 50", [] {
    for (int n = 3; n <= 5; ++n) {
      const auto seq = StepSequence::BallCell(n);
      for (int r = 0; r <= 50; ++r) {
        if (GeoMean(r, seq) != DlApproxMean(n, r)) {
          return "differs at n=" + std::to_string(n) + ", r=" + std::to_string(r);
        }
      }
    }
    return std::string("ok");
  });
  const int limBalls = full ? 40 : 30;
  for (const char* a : {"1/2", "1/3"}) {
    s.check(std::string("scaled moments at r=") + std::to_string(limBalls) +
                " vs limits, alpha=" + a,
            [&] {
              const Rational alpha = Rational::Parse(a);
              const auto lim = GeoAlphaLimits(alpha);
              const auto rep = GeoMomentsNumeric(alpha, limBalls, 6);
              const Rational cv2 = rep.variance / (rep.mean * rep.mean);
              const std::pair<Rational, Rational> pairs[] = {
                  {cv2, lim.cvSquared},
                  {rep.scaledMoment(3).squared, lim.skewnessSquared},
                  {*rep.scaledMoment(4).exact, lim.kurtosis},
                  {rep.scaledMoment(5).squared, lim.fifthSquared},
                  {*rep.scaledMoment(6).exact, lim.sixth},
              };
              const char* names[] = {"cv^2", "skewness^2", "kurtosis", "m5^2", "m6"};
              const Rational tol = Rational::Parse("1/1000000");
              std::ostringstream worst;
              for (std::size_t i = 0; i < 5; ++i) {
                const Rational rel = ((pairs[i].first - pairs[i].second) / pairs[i].second).abs();
                if (rel >= tol) {
                  worst << names[i] << " relative error " << rel.toDouble();
                  return worst.str();
                }
              }
              return std::string("ok");
            });
  }
  return s.take();
}

struct PinnedRun {
  int balls;
  int cells;
  std::uint64_t seed;
};
constexpr PinnedRun kPinnedRuns[] = {{3, 3, 20261016}, {5, 5, 20261017}, {10, 10, 20261018}};

std::vector<CheckResult> StatsSuite(VerifyBudget budget) {
  Suite s;
  const std::int64_t trials = budget == VerifyBudget::kFull ? 100000 : 20000;
  for (const auto& run : kPinnedRuns) {
    const std::string tag =
        "(r,n)=(" + std::to_string(run.balls) + "," + std::to_string(run.cells) + ")";
    const SimBatch batch = SimulateBatch(run.balls, run.cells, trials, run.seed);
    s.check("mean within 4 standard errors " + tag, [&] {
      const auto exact = MeanVarianceTable(run.cells, run.balls).back();
      const double se = std::sqrt(exact.variance.toDouble() / static_cast<double>(trials));
      const double z = (batch.mean - exact.mean).toDouble() / se;
      std::ostringstream out;
      out << "z = " << z;
      return std::abs(z) < 4.0 ? "ok " + out.str() : out.str();
    });
    s.check("chi-square at 99.9% " + tag, [&] {
      const auto law = DurationLawCovering(run.balls, run.cells, Rational::Parse("1/10000000000"));
      const auto gof = GofCompare(batch, law);
      std::ostringstream out;
      out << "chi2 = " << gof.chiSquare << ", dof = " << gof.degreesOfFreedom
          << ", critical = " << gof.criticalValue;
      return gof.passes ? "ok " + out.str() : out.str();
    });
  }
  s.check("batch independent of thread count", [] {
    const auto one = SimulateBatch(6, 4, 2000, 99, 1);
    const auto many = SimulateBatch(6, 4, 2000, 99, 8);
    return one.durations == many.durations ? std::string("ok") : std::string("durations differ");
  });
  return s.take();
}

}  // namespace

std::vector<std::string> SuiteNames() { return {"paper", "oracle", "limits", "stats"}; }

std::vector<CheckResult> RunSuite(std::string_view suite, VerifyBudget budget) {
  if (suite == "paper") return PublishedFormsSuite();
  if (suite == "oracle") return OracleSuite(budget);
  if (suite == "limits") return LimitsSuite(budget);
  if (suite == "stats") return StatsSuite(budget);
  throw Error(ErrorKind::kDomain, "unknown suite '" + std::string(suite) + "'");
}

}  // namespace ballcell
