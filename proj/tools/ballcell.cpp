// ballcell: command-line front end for the ball-and-cell capture game engine.
//
// Every command prints one envelope to stdout:
//   {"command", "parameters", "result", "timing_ms", "version"}
// in JSON (default), or the result alone as text or LaTeX. Exact values are
// "p/q" strings; decimals are strings too. Diagnostics go to stderr.
//
// Exit codes: 0 success, 1 internal error or failed verification, 2 usage or
// argument-range error, 3 non-terminating game, 4 budget exceeded.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ballcell/approx.hpp"
#include "ballcell/error.hpp"
#include "ballcell/game.hpp"
#include "ballcell/geometric.hpp"
#include "ballcell/montecarlo.hpp"
#include "ballcell/pgf.hpp"
#include "ballcell/render.hpp"
#include "ballcell/serialize.hpp"
#include "ballcell/verify.hpp"
#include "json.hpp"

#ifndef BALLCELL_VERSION
#define BALLCELL_VERSION "0.0.0"
#endif

namespace {

using ballcell::BigDecimal;
using ballcell::Error;
using ballcell::ErrorKind;
using ballcell::Rational;
using ballcell::RatFunc1;
using ballcell::RatFunc2;
using ballcell::Require;
using nlohmann::json;

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kDivergent = 3, kBudget = 4 };

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDivergent:
      return kDivergent;
    case ErrorKind::kBudget:
      return kBudget;
    case ErrorKind::kDomain:
    case ErrorKind::kParse:
    case ErrorKind::kPole:
    case ErrorKind::kDivisionByZero:
    case ErrorKind::kMismatch:
      return kUsage;
  }
  return kFailure;
}

// Budgets from BALLCELL_BUDGET: either one integer (the enumeration budget)
// or comma-separated key=value pairs with keys enumeration, symbolic, geo,
// simulation.
struct Budgets {
  std::uint64_t enumeration = ballcell::kDefaultEnumerationBudget;
  int symbolic = ballcell::kDefaultSymbolicCeiling;
  int geo = ballcell::kDefaultGeoBallBudget;
  std::int64_t simulation = ballcell::kDefaultSimulationBallBudget;
};

long long ParseCount(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used == text.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::kParse, "bad " + what + " value '" + text + "'");
}

Budgets ReadBudgets() {
  Budgets b;
  const char* env = std::getenv("BALLCELL_BUDGET");
  if (env == nullptr || *env == '\0') return b;
  const std::string text(env);
  if (text.find('=') == std::string::npos) {
    b.enumeration = static_cast<std::uint64_t>(ParseCount(text, "BALLCELL_BUDGET"));
    return b;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    Require(eq != std::string::npos, ErrorKind::kParse, "bad BALLCELL_BUDGET item '" + item + "'");
    const std::string key = item.substr(0, eq);
    const long long v = ParseCount(item.substr(eq + 1), "BALLCELL_BUDGET " + key);
    if (key == "enumeration") {
      b.enumeration = static_cast<std::uint64_t>(v);
    } else if (key == "symbolic") {
      b.symbolic = static_cast<int>(v);
    } else if (key == "geo") {
      b.geo = static_cast<int>(v);
    } else if (key == "simulation") {
      b.simulation = v;
    } else {
      throw Error(ErrorKind::kParse, "unknown BALLCELL_BUDGET key '" + key + "'");
    }
  }
  return b;
}

int ReadPrecision() {
  const char* env = std::getenv("BALLCELL_PRECISION");
  if (env == nullptr || *env == '\0') return ballcell::kDefaultPrecision;
  const long long p = ParseCount(env, "BALLCELL_PRECISION");
  Require(p >= 1 && p <= 100000, ErrorKind::kDomain, "BALLCELL_PRECISION must lie in 1..100000");
  return static_cast<int>(p);
}

std::string Text(const Rational& q) { return ballcell::ToText(q); }

json Decimal(const BigDecimal& d) { return d.str(); }

// A rational function of n (symbolic moments): wire form as a bivariate
// function constant in x, plus its text.
json SymbolicValue(const RatFunc1& f) {
  json j = ballcell::ToJson(ballcell::LiftN(f));
  j["text"] = ballcell::ToText(f, "n");
  return j;
}

// Output of one command: JSON payload plus text and LaTeX renderings.
struct Output {
  json result = json::object();
  std::ostringstream text;
  std::ostringstream latex;  // empty when the command has no LaTeX form
};

// ---------------------------------------------------------------------------

struct PgfArgs {
  int balls = 0;
  int cells = 0;
  bool symbolic = false;
  int expand = -1;
};

void RunPgf(const PgfArgs& a, const Budgets& budgets, Output& out) {
  Require(a.balls >= 0, ErrorKind::kDomain, "--balls must be >= 0");
  if (a.symbolic) {
    Require(a.expand < 0, ErrorKind::kDomain, "--expand needs a numeric --cells");
    const auto pgf = ballcell::PgfSymbolic(a.balls, budgets.symbolic);
    out.result["balls"] = a.balls;
    out.result["cells"] = "n";
    out.result["pgf"] = ballcell::ToJson(pgf.func);
    out.result["text"] = ballcell::ToText(pgf.func);
    out.text << "F_{" << a.balls << ",n}(x) = " << ballcell::ToText(pgf.func) << "\n";
    out.latex << "F_{" << a.balls << ",n}(x) = "
              << ballcell::ToLatexFactored(pgf.func, pgf.denominatorFactors) << "\n";
    return;
  }
  Require(a.cells >= 1, ErrorKind::kDomain, "--cells must be >= 1");
  const auto pgf = ballcell::PgfNumeric(a.balls, a.cells);
  Require(pgf.terminates, ErrorKind::kDivergent,
          "the game never terminates with one cell and two or more balls");
  out.result["balls"] = a.balls;
  out.result["cells"] = a.cells;
  out.result["pgf"] = ballcell::ToJson(pgf.func);
  out.result["text"] = ballcell::ToText(pgf.func);
  const std::string name = "F_{" + std::to_string(a.balls) + "," + std::to_string(a.cells) + "}(x)";
  out.text << name << " = " << ballcell::ToText(pgf.func) << "\n";
  out.latex << name << " = " << ballcell::ToLatexFactored(pgf.func, pgf.denominatorFactors)
            << "\n";
  if (a.expand >= 0) {
    const auto coeffs = ballcell::SeriesExpand(pgf.func, a.expand);
    json dist = json::array();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      dist.push_back(Text(coeffs[k]));
      out.text << "P[duration = " << k << "] = " << Text(coeffs[k]) << "\n";
    }
    out.result["distribution"] = dist;
  }
}

// ---------------------------------------------------------------------------

struct MomentsArgs {
  int balls = 0;
  int cells = 0;
  bool symbolic = false;
  int order = 2;
};

void RunMoments(const MomentsArgs& a, const Budgets& budgets, int precision, Output& out) {
  Require(a.order >= 1, ErrorKind::kDomain, "--order must be >= 1");
  out.result["balls"] = a.balls;
  out.result["order"] = a.order;
  if (a.symbolic) {
    const auto rep = ballcell::MomentsSymbolic(a.balls, a.order, budgets.symbolic);
    out.result["cells"] = "n";
    out.result["mean"] = SymbolicValue(rep.mean);
    out.text << "mean = " << ballcell::ToText(rep.mean, "n") << "\n";
    out.latex << "M_n(" << a.balls << ") = " << ballcell::ToLatex(rep.mean, "n") << "\n";
    json raw = json::array(), central = json::array(), scaled = json::array();
    for (int i = 1; i <= a.order; ++i) raw.push_back(SymbolicValue(rep.rawMoment(i)));
    for (int i = 2; i <= a.order; ++i) {
      central.push_back(SymbolicValue(rep.centralMoment(i)));
    }
    if (a.order >= 2) {
      out.result["variance"] = SymbolicValue(rep.variance);
      out.text << "variance = " << ballcell::ToText(rep.variance, "n") << "\n";
      out.latex << "Var_n(" << a.balls << ") = " << ballcell::ToLatex(rep.variance, "n") << "\n";
    }
    for (int i = 3; i <= a.order && rep.scaledDefined; ++i) {
      const auto& s = rep.scaledMoment(i);
      json e{{"order", i}, {"squared", SymbolicValue(s.squared)}};
      if (s.exact) e["exact"] = SymbolicValue(*s.exact);
      scaled.push_back(e);
      if (s.exact) {
        out.text << "scaled m_" << i << " = " << ballcell::ToText(*s.exact, "n") << "\n";
      } else {
        out.text << "scaled m_" << i << "^2 = " << ballcell::ToText(s.squared, "n") << "\n";
      }
    }
    out.result["raw"] = raw;
    out.result["central"] = central;
    out.result["scaled"] = scaled;
    out.result["scaled_defined"] = rep.scaledDefined;
    return;
  }
  out.result["cells"] = a.cells;
  const auto rep = ballcell::Moments(a.balls, a.cells, a.order, precision);
  auto emit = [&](const std::string& label, const Rational& q) {
    out.text << label << " = " << Text(q) << "  (" << BigDecimal(q, precision).str() << ")\n";
  };
  out.result["mean"] = Text(rep.mean);
  emit("mean", rep.mean);
  if (a.order >= 2) {
    out.result["variance"] = Text(rep.variance);
    emit("variance", rep.variance);
  }
  json raw = json::array(), central = json::array(), scaled = json::array();
  for (int i = 1; i <= a.order; ++i) {
    raw.push_back(Text(rep.rawMoment(i)));
    emit("E[X^" + std::to_string(i) + "]", rep.rawMoment(i));
  }
  for (int i = 2; i <= a.order; ++i) {
    central.push_back(Text(rep.centralMoment(i)));
    emit("m_" + std::to_string(i), rep.centralMoment(i));
  }
  for (int i = 3; i <= a.order; ++i) {
    if (!rep.scaledDefined) break;
    const auto& s = rep.scaledMoment(i);
    json e{{"order", i}, {"squared", Text(s.squared)}, {"sign", s.sign}};
    if (s.exact) e["exact"] = Text(*s.exact);
    if (s.value) e["value"] = Decimal(*s.value);
    scaled.push_back(e);
    out.text << "scaled m_" << i << " = " << (s.value ? s.value->str() : "?")
             << "  (square " << Text(s.squared) << ")\n";
  }
  if (a.order >= 3 && !rep.scaledDefined) out.text << "scaled moments undefined (variance 0)\n";
  out.result["raw"] = raw;
  out.result["central"] = central;
  out.result["scaled"] = scaled;
  out.result["scaled_defined"] = rep.scaledDefined;
}

// ---------------------------------------------------------------------------

struct ApproxArgs {
  int cells = 0;
  int balls = -1;
  bool limit = false;
  int rmax = ballcell::kDefaultLimitBalls;
  int digits = -1;
};

void RunApprox(const ApproxArgs& a, int precision, Output& out) {
  Require(a.cells >= 2, ErrorKind::kDomain, "--cells must be >= 2");
  out.result["cells"] = a.cells;
  if (a.limit) {
    ballcell::LimitEstimate est;
    if (a.digits >= 0) {
      const auto st = ballcell::StabilizedErrorLimit(a.cells, a.digits, a.rmax, 4 * a.rmax,
                                                     precision);
      est = st.estimate;
      out.result["stabilized"] = st.stabilized;
    } else {
      est = ballcell::ErrorLimitEstimate(a.cells, a.rmax, precision);
    }
    out.result["limit"] = Decimal(est.value);
    out.result["gap"] = Decimal(est.gap);
    out.result["rmax"] = est.balls;
    out.result["exact_path"] = est.exact;
    out.text << "lim E_" << a.cells << "(r) ~ " << est.value.str() << "\n"
             << "evaluated at r = " << est.balls << ", gap to r/2: " << est.gap.str() << "\n";
    return;
  }
  Require(a.balls >= 0, ErrorKind::kDomain, "--balls is required without --limit");
  const auto rep = ballcell::MakeApproxReport(a.cells, a.balls, precision);
  out.result["balls"] = a.balls;
  out.result["approx_mean"] = Text(rep.approxMean);
  out.result["exact_mean"] = Text(rep.exactMean);
  out.result["error"] = Text(rep.error);
  out.result["ratio_mean"] = Decimal(rep.ratioMean);
  out.result["approx_variance"] = Text(rep.approxVar);
  out.result["exact_variance"] = Text(rep.exactVar);
  out.result["ratio_variance"] = Decimal(rep.ratioVar);
  out.text << "M_" << a.cells << "(" << a.balls << ") = " << Text(rep.exactMean) << "\n"
           << "approximation = " << Text(rep.approxMean) << "\n"
           << "E = " << Text(rep.error) << "  (" << BigDecimal(rep.error, precision).str() << ")\n"
           << "mean ratio = " << rep.ratioMean.str() << "\n"
           << "variance ratio = " << rep.ratioVar.str() << "\n";
}

// ---------------------------------------------------------------------------

struct GeoArgs {
  std::string alpha;
  std::string table;
  int r = -1;
  bool limits = false;
  int order = 0;
};

std::vector<Rational> ReadTable(const std::string& path) {
  std::ifstream in(path);
  Require(in.good(), ErrorKind::kDomain, "cannot read step table '" + path + "'");
  std::vector<Rational> values;
  std::string token;
  while (in >> token) values.push_back(Rational::Parse(token));
  return values;
}

void RunGeo(const GeoArgs& a, const Budgets& budgets, int precision, Output& out) {
  Require(a.alpha.empty() != a.table.empty(), ErrorKind::kDomain,
          "give exactly one of --alpha and --table");
  if (!a.table.empty()) {
    Require(a.r >= 0, ErrorKind::kDomain, "--table needs --r");
    Require(!a.limits, ErrorKind::kDomain, "--limits needs --alpha");
    const auto seq = ballcell::StepSequence::Table(ReadTable(a.table));
    const Rational mean = ballcell::GeoMean(a.r, seq);
    const Rational var = ballcell::GeoVariance(a.r, seq);
    out.result["r"] = a.r;
    out.result["mean"] = Text(mean);
    out.result["variance"] = Text(var);
    out.text << "mean = " << Text(mean) << "\nvariance = " << Text(var) << "\n";
    if (a.order > 0) {
      const auto rep = ballcell::MomentsOf(ballcell::GeoPGF(a.r, seq), a.order, precision);
      json raw = json::array();
      for (int i = 1; i <= a.order; ++i) raw.push_back(Text(rep.rawMoment(i)));
      out.result["raw"] = raw;
    }
    return;
  }
  const Rational alpha = Rational::Parse(a.alpha);
  Require(alpha > Rational(0) && alpha < Rational(1), ErrorKind::kDomain,
          "--alpha must lie strictly between 0 and 1");
  out.result["alpha"] = Text(alpha);
  Require(a.r >= 0 || a.limits, ErrorKind::kDomain, "give --r, --limits, or both");
  if (a.r >= 0) {
    const auto closed = ballcell::GeoAlphaClosedForms(alpha, a.r);
    out.result["r"] = a.r;
    out.result["mean"] = Text(closed.mean);
    out.result["variance"] = Text(closed.variance);
    out.text << "mean = " << Text(closed.mean) << "\nvariance = " << Text(closed.variance) << "\n";
    if (a.order > 0) {
      const auto rep =
          ballcell::GeoMomentsNumeric(alpha, a.r, a.order, precision, budgets.geo);
      json raw = json::array(), central = json::array(), scaled = json::array();
      for (int i = 1; i <= a.order; ++i) raw.push_back(Text(rep.rawMoment(i)));
      for (int i = 2; i <= a.order; ++i) central.push_back(Text(rep.centralMoment(i)));
      for (int i = 3; i <= a.order && rep.scaledDefined; ++i) {
        const auto& s = rep.scaledMoment(i);
        json e{{"order", i}, {"squared", Text(s.squared)}, {"sign", s.sign}};
        if (s.exact) e["exact"] = Text(*s.exact);
        if (s.value) e["value"] = Decimal(*s.value);
        scaled.push_back(e);
        out.text << "scaled m_" << i << " = " << (s.value ? s.value->str() : "?") << "\n";
      }
      out.result["raw"] = raw;
      out.result["central"] = central;
      out.result["scaled"] = scaled;
    }
  }
  if (a.limits) {
    const auto lim = ballcell::GeoAlphaLimits(alpha, precision);
    out.result["limits"] = json{{"cv_squared", Text(lim.cvSquared)},
                                {"cv", Decimal(lim.cv)},
                                {"skewness_squared", Text(lim.skewnessSquared)},
                                {"skewness", Decimal(lim.skewness)},
                                {"kurtosis", Text(lim.kurtosis)},
                                {"fifth_squared", Text(lim.fifthSquared)},
                                {"fifth", Decimal(lim.fifth)},
                                {"sixth", Text(lim.sixth)}};
    out.text << "limiting cv^2 = " << Text(lim.cvSquared) << "  (cv " << lim.cv.str() << ")\n"
             << "limiting skewness^2 = " << Text(lim.skewnessSquared) << "  (skewness "
             << lim.skewness.str() << ")\n"
             << "limiting kurtosis = " << Text(lim.kurtosis) << "\n"
             << "limiting scaled fifth moment^2 = " << Text(lim.fifthSquared) << "  ("
             << lim.fifth.str() << ")\n"
             << "limiting scaled sixth moment = " << Text(lim.sixth) << "\n";
  }
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
  long long balls = 0;
  long long cells = 0;
  long long trials = 1;
  std::uint64_t seed = 0;
  bool verbose = false;
  bool gof = false;
  int threads = 0;
};

void RunSimulate(const SimulateArgs& a, const Budgets& budgets, int precision, Output& out) {
  Require(a.balls <= budgets.simulation && a.cells <= budgets.simulation, ErrorKind::kBudget,
          "simulation size exceeds the budget of " + std::to_string(budgets.simulation));
  const auto batch = ballcell::SimulateBatch(a.balls, a.cells, a.trials, a.seed, a.threads);
  json hist = json::object();
  for (const auto& [k, c] : batch.histogram) hist[std::to_string(k)] = c;
  out.result["balls"] = a.balls;
  out.result["cells"] = a.cells;
  out.result["trials"] = a.trials;
  out.result["seed"] = a.seed;
  out.result["histogram"] = hist;
  out.result["mean"] = Text(batch.mean);
  out.result["variance"] = Text(batch.variance);
  out.result["mean_decimal"] = Decimal(BigDecimal(batch.mean, precision));
  out.text << "trials = " << a.trials << ", mean = " << BigDecimal(batch.mean, 12).str()
           << ", sample variance = " << BigDecimal(batch.variance, 12).str() << "\n";
  for (const auto& [k, c] : batch.histogram) out.text << "  duration " << k << ": " << c << "\n";
  if (a.verbose) {
    json traces = json::array();
    for (long long i = 0; i < a.trials; ++i) {
      const auto run = ballcell::SimulateGame(a.balls, a.cells,
                                              {a.seed, static_cast<std::uint64_t>(i)}, true,
                                              budgets.simulation);
      json rounds = json::array();
      out.text << "game " << i + 1 << ": duration " << run.duration << "\n";
      for (const auto& round : run.trace) {
        json cells = json::array();
        for (auto c : round.assignment) cells.push_back(c + 1);
        rounds.push_back(json{{"round", round.round},
                              {"balls_before", round.ballsBefore},
                              {"captured", round.captured},
                              {"assignment", cells}});
        out.text << "  round " << round.round << ": " << round.ballsBefore << " balls, "
                 << round.captured << " captured\n";
      }
      traces.push_back(json{{"trial", i}, {"duration", run.duration}, {"rounds", rounds}});
    }
    out.result["traces"] = traces;
  }
  if (a.gof) {
    Require(a.balls <= 1000 && a.cells <= 1000, ErrorKind::kBudget,
            "--gof builds the exact law, limited to r, n <= 1000");
    const auto law = ballcell::DurationLawCovering(static_cast<int>(a.balls),
                                                   static_cast<int>(a.cells),
                                                   Rational::Parse("1/10000000000"));
    const auto gof = ballcell::GofCompare(batch, law);
    out.result["gof"] = json{{"total_variation", Text(gof.totalVariation)},
                             {"chi_square", gof.chiSquare},
                             {"degrees_of_freedom", gof.degreesOfFreedom},
                             {"critical_value", gof.criticalValue},
                             {"level", gof.level},
                             {"passes", gof.passes}};
    out.text << "total variation = " << gof.totalVariation.toDouble() << "\n"
             << "chi-square = " << gof.chiSquare << " on " << gof.degreesOfFreedom
             << " dof, 99.9% critical value " << gof.criticalValue << ": "
             << (gof.passes ? "pass" : "fail") << "\n";
  }
}

// ---------------------------------------------------------------------------

bool RunVerify(const std::string& suite, const std::string& budget, Output& out) {
  Require(budget == "small" || budget == "full", ErrorKind::kDomain,
          "--budget must be small or full");
  const auto level = budget == "full" ? ballcell::VerifyBudget::kFull
                                      : ballcell::VerifyBudget::kSmall;
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = ballcell::SuiteNames();
  } else {
    suites.push_back(suite);
  }
  bool all = true;
  json checks = json::array();
  for (const auto& name : suites) {
    for (const auto& c : ballcell::RunSuite(name, level)) {
      all = all && c.passed;
      checks.push_back(
          json{{"suite", name}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      out.text << (c.passed ? "PASS  " : "FAIL  ") << name << ": " << c.name;
      if (!c.detail.empty()) out.text << "  [" << c.detail << "]";
      out.text << "\n";
    }
  }
  out.result["checks"] = checks;
  out.result["passed"] = all;
  return all;
}

// ---------------------------------------------------------------------------

void RunTransition(int cells, int balls, bool symbolic, bool brute, const Budgets& budgets,
                   Output& out) {
  out.result["balls"] = balls;
  if (symbolic) {
    Require(balls >= 0, ErrorKind::kDomain, "--balls must be >= 0");
    out.result["cells"] = "n";
    json probs = json::array();
    for (int t = 0; t <= balls; ++t) {
      const RatFunc1 p = ballcell::TransitionProbSymbolic(balls, t);
      probs.push_back(SymbolicValue(p));
      out.text << "P[" << t << " captured] = " << ballcell::ToText(p, "n") << "\n";
      out.latex << "P_{" << balls << "," << balls - t << "}(n) = " << ballcell::ToLatex(p, "n")
                << "\n";
    }
    out.result["probs"] = probs;
    return;
  }
  out.result["cells"] = cells;
  const auto row = brute ? ballcell::BruteForceRow(cells, balls, budgets.enumeration)
                         : ballcell::ComputeTransitionRow(cells, balls);
  out.result["method"] = brute ? "enumeration" : "formula";
  json probs = json::array();
  for (std::size_t t = 0; t < row.probs.size(); ++t) {
    probs.push_back(Text(row.probs[t]));
    out.text << "P[" << t << " captured] = " << Text(row.probs[t]) << "\n";
  }
  out.result["probs"] = probs;
}

void RunDistribution(int balls, int cells, int kmax, Output& out) {
  Require(kmax >= 0, ErrorKind::kDomain, "--kmax must be >= 0");
  const auto probs = ballcell::DurationDistribution(balls, cells, kmax);
  json arr = json::array();
  for (std::size_t k = 0; k < probs.size(); ++k) {
    arr.push_back(Text(probs[k]));
    out.text << "P[duration = " << k << "] = " << Text(probs[k]) << "\n";
  }
  out.result["balls"] = balls;
  out.result["cells"] = cells;
  out.result["distribution"] = arr;
}

void RunDiagonal(int rmax, int precision, Output& out) {
  Require(rmax >= 1, ErrorKind::kDomain, "--rmax must be >= 1");
  json rows = json::array();
  for (const auto& e : ballcell::DiagonalSequence(rmax)) {
    rows.push_back(json{{"r", e.balls},
                        {"mean", Text(e.mean)},
                        {"variance", Text(e.variance)},
                        {"mean_decimal", Decimal(BigDecimal(e.mean, precision))},
                        {"variance_decimal", Decimal(BigDecimal(e.variance, precision))}});
    out.text << e.balls << "  " << BigDecimal(e.mean, 20).str() << "  "
             << BigDecimal(e.variance, 20).str() << "\n";
  }
  out.result["rows"] = rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of the ball-and-cell capture game"};
  app.require_subcommand(1);
  app.set_version_flag("--version", BALLCELL_VERSION);
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text", "latex"}))
      ->capture_default_str();

  json params = json::object();

  PgfArgs pgf;
  auto* pgfCmd = app.add_subcommand("pgf", "Duration probability generating function F_{r,n}(x)");
  pgfCmd->add_option("--balls,-r", pgf.balls, "Number of balls r")->required();
  auto* pgfCells = pgfCmd->add_option("--cells,-n", pgf.cells, "Number of cells n");
  auto* pgfSym = pgfCmd->add_flag("--symbolic-n", pgf.symbolic, "Keep n symbolic");
  pgfCells->excludes(pgfSym);
  pgfCmd->add_option("--expand", pgf.expand, "Also list Pr[duration = k] for k = 0..K");

  MomentsArgs mom;
  auto* momCmd = app.add_subcommand("moments", "Raw, central and scaled moments of the duration");
  momCmd->add_option("--balls,-r", mom.balls, "Number of balls r")->required();
  auto* momCells = momCmd->add_option("--cells,-n", mom.cells, "Number of cells n");
  auto* momSym = momCmd->add_flag("--symbolic-n", mom.symbolic, "Keep n symbolic");
  momCells->excludes(momSym);
  momCmd->add_option("--order", mom.order, "Highest moment order")->capture_default_str();

  ApproxArgs apx;
  auto* apxCmd = app.add_subcommand("approx", "Harmonic-geometric approximation and its error");
  apxCmd->add_option("--cells,-n", apx.cells, "Number of cells n")->required();
  apxCmd->add_option("--balls,-r", apx.balls, "Number of balls r");
  apxCmd->add_flag("--limit", apx.limit, "Estimate lim E_n(r) as r grows");
  apxCmd->add_option("--rmax", apx.rmax, "r at which the limit is evaluated")
      ->capture_default_str();
  apxCmd->add_option("--digits", apx.digits, "Double r until this many digits are stable");

  GeoArgs geo;
  auto* geoCmd = app.add_subcommand("geo", "Down-or-stay chain with step probabilities a(i)");
  auto* geoAlpha = geoCmd->add_option("--alpha", geo.alpha, "a(i) = alpha^i, alpha = P/Q");
  auto* geoTable = geoCmd->add_option("--table", geo.table, "File of a(1), a(2), ... as P/Q");
  geoAlpha->excludes(geoTable);
  geoCmd->add_option("--r", geo.r, "Starting state r");
  geoCmd->add_flag("--limits", geo.limits, "Limiting scaled moments for a(i) = alpha^i");
  geoCmd->add_option("--order", geo.order, "Moments up to this order from the PGF");

  SimulateArgs sim;
  auto* simCmd = app.add_subcommand("simulate", "Seeded Monte Carlo games");
  simCmd->add_option("--balls,-r", sim.balls, "Number of balls r")->required();
  simCmd->add_option("--cells,-n", sim.cells, "Number of cells n")->required();
  simCmd->add_option("--trials", sim.trials, "Number of games")->capture_default_str();
  simCmd->add_option("--seed", sim.seed, "64-bit seed")->capture_default_str();
  simCmd->add_flag("--verbose", sim.verbose, "Record every round of every game");
  simCmd->add_flag("--gof", sim.gof, "Compare with the exact duration law");
  simCmd->add_option("--threads", sim.threads, "Worker threads (0 = OpenMP default)");

  std::string suite = "all";
  std::string budget = "small";
  auto* verCmd = app.add_subcommand("verify", "Run built-in self-check suites");
  verCmd->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"all", "paper", "oracle", "limits", "stats"}))
      ->capture_default_str();
  verCmd->add_option("--budget", budget, "small or full")->capture_default_str();

  int trCells = 0, trBalls = 0;
  bool trSym = false, trBrute = false;
  auto* trCmd = app.add_subcommand("transition", "One-round capture probabilities P_{r,r-t}(n)");
  trCmd->add_option("--balls,-r", trBalls, "Number of balls r")->required();
  auto* trCellsOpt = trCmd->add_option("--cells,-n", trCells, "Number of cells n");
  auto* trSymOpt = trCmd->add_flag("--symbolic-n", trSym, "Keep n symbolic");
  trCellsOpt->excludes(trSymOpt);
  trCmd->add_flag("--brute-force", trBrute, "Enumerate all n^r placements");

  int dBalls = 0, dCells = 0, dKmax = 25;
  auto* distCmd = app.add_subcommand("distribution", "Duration law by matrix powering");
  distCmd->add_option("--balls,-r", dBalls, "Number of balls r")->required();
  distCmd->add_option("--cells,-n", dCells, "Number of cells n")->required();
  distCmd->add_option("--kmax", dKmax, "Largest duration listed")->capture_default_str();

  int diagMax = 20;
  auto* diagCmd = app.add_subcommand("diagonal", "M_r(r) and Var_r(r) for r = 1..rmax");
  diagCmd->add_option("--rmax", diagMax, "Largest r")->capture_default_str();

  for (auto* cmd : app.get_subcommands({})) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text", "latex"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  for (const auto* opt : cmd->get_options()) {
    if (opt->get_single_name() == "help" || opt->count() == 0) continue;
    if (opt->get_single_name() == "format") continue;
    const auto results = opt->results();
    if (opt->get_type_size() == 0) {
      params[opt->get_single_name()] = true;
    } else {
      params[opt->get_single_name()] = results.empty() ? "" : results.front();
    }
  }
  params["format"] = format;

  Output out;
  int code = kOk;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Budgets budgets = ReadBudgets();
    const int precision = ReadPrecision();
    const std::string name = cmd->get_name();
    if (name == "pgf") {
      if (!pgf.symbolic && pgfCells->count() == 0) {
        throw Error(ErrorKind::kDomain, "give --cells N or --symbolic-n");
      }
      RunPgf(pgf, budgets, out);
    } else if (name == "moments") {
      if (!mom.symbolic && momCells->count() == 0) {
        throw Error(ErrorKind::kDomain, "give --cells N or --symbolic-n");
      }
      RunMoments(mom, budgets, precision, out);
    } else if (name == "approx") {
      RunApprox(apx, precision, out);
    } else if (name == "geo") {
      RunGeo(geo, budgets, precision, out);
    } else if (name == "simulate") {
      RunSimulate(sim, budgets, precision, out);
    } else if (name == "verify") {
      if (!RunVerify(suite, budget, out)) code = kFailure;
    } else if (name == "transition") {
      if (!trSym && trCellsOpt->count() == 0) {
        throw Error(ErrorKind::kDomain, "give --cells N or --symbolic-n");
      }
      RunTransition(trCells, trBalls, trSym, trBrute, budgets, out);
    } else if (name == "distribution") {
      RunDistribution(dBalls, dCells, dKmax, out);
    } else if (name == "diagonal") {
      RunDiagonal(diagMax, precision, out);
    }
  } catch (const Error& e) {
    std::cerr << "ballcell: " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "ballcell: internal error: " << e.what() << "\n";
    return kFailure;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (format == "json") {
    const json envelope{{"command", cmd->get_name()},
                        {"parameters", params},
                        {"result", out.result},
                        {"timing_ms", ms},
                        {"version", BALLCELL_VERSION}};
    std::cout << envelope.dump(2) << "\n";
  } else if (format == "latex" && !out.latex.str().empty()) {
    std::cout << out.latex.str();
  } else {
    std::cout << out.text.str();
  }
  return code;
}
