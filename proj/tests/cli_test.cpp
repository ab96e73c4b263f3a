#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exitCode = -1;
  std::string out;
};

RunResult RunCli(const std::string& args) {
  const std::string cmd = std::string(BALLCELL_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult res;
  if (pipe == nullptr) return res;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

nlohmann::json Json(const std::string& args) {
  const auto r = RunCli(args);
  EXPECT_EQ(r.exitCode, 0) << args;
  return nlohmann::json::parse(r.out);
}

std::string StripTiming(std::string s) {
  const auto at = s.find("\"timing_ms\"");
  if (at == std::string::npos) return s;
  const auto end = s.find('\n', at);
  return s.erase(at, end - at);
}

TEST(Cli, PgfText) {
  const auto r = RunCli("pgf --balls 2 --cells 2 --format text");
  EXPECT_EQ(r.exitCode, 0);
  EXPECT_EQ(r.out, "F_{2,2}(x) = -x/(x - 2)\n");
}

TEST(Cli, PgfJsonEnvelope) {
  const auto j = Json("pgf --balls 3 --cells 3 --expand 3");
  EXPECT_EQ(j["command"], "pgf");
  EXPECT_TRUE(j.contains("timing_ms"));
  EXPECT_TRUE(j.contains("version"));
  EXPECT_EQ(j["parameters"]["balls"], "3");
  EXPECT_EQ(j["result"]["distribution"], nlohmann::json({"0", "2/9", "38/81", "146/729"}));
  EXPECT_EQ(j["result"]["pgf"]["den"], nlohmann::json::parse(R"([[0,"27"],[1,"-12"],[2,"1"]])"));
}

TEST(Cli, PgfSymbolicLatex) {
  const auto r = RunCli("pgf --balls 2 --symbolic-n --format latex");
  EXPECT_EQ(r.exitCode, 0);
  EXPECT_NE(r.out.find("\\frac{x \\left(n - 1\\right)}{\\left(n - x\\right)}"),
            std::string::npos)
      << r.out;
}

TEST(Cli, NonTerminatingExitCode) {
  const auto r = RunCli("pgf --balls 3 --cells 1");
  EXPECT_EQ(r.exitCode, 3);
  EXPECT_EQ(RunCli("moments --balls 3 --cells 1").exitCode, 3);
  EXPECT_EQ(RunCli("simulate --balls 3 --cells 1 --trials 3").exitCode, 3);
}

TEST(Cli, UsageAndBudgetExitCodes) {
  EXPECT_EQ(RunCli("pgf --cells 2").exitCode, 2);
  EXPECT_EQ(RunCli("pgf --balls 2 --cells 2 --symbolic-n").exitCode, 2);
  EXPECT_EQ(RunCli("frobnicate").exitCode, 2);
  EXPECT_EQ(RunCli("approx --cells 1 --balls 2").exitCode, 2);
  EXPECT_EQ(RunCli("geo --alpha 3/2 --r 1").exitCode, 2);
  EXPECT_EQ(RunCli("transition --cells 10 --balls 9 --brute-force").exitCode, 4);
  EXPECT_EQ(RunCli("pgf --balls 41 --symbolic-n").exitCode, 4);
  EXPECT_EQ(RunCli("--help").exitCode, 0);
}

TEST(Cli, BudgetEnvironment) {
  const std::string env = "BALLCELL_BUDGET=100000000 ";
  const std::string cmd = env + BALLCELL_CLI + " transition --cells 10 --balls 7 --brute-force";
  EXPECT_EQ(std::system((cmd + " >/dev/null 2>&1").c_str()), 0);
  const std::string tight = std::string("BALLCELL_BUDGET=symbolic=3 ") + BALLCELL_CLI +
                            " pgf --balls 4 --symbolic-n >/dev/null 2>&1";
  EXPECT_EQ(WEXITSTATUS(std::system(tight.c_str())), 4);
}

TEST(Cli, PrecisionEnvironment) {
  const std::string cmd = std::string("BALLCELL_PRECISION=8 ") + BALLCELL_CLI +
                          " approx --cells 3 --balls 5";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  const auto j = nlohmann::json::parse(out);
  const std::string ratio = j["result"]["ratio_mean"];
  EXPECT_LE(ratio.size(), 10u) << ratio;
}

TEST(Cli, Moments) {
  const auto a = Json("moments --balls 2 --symbolic-n --order 1");
  EXPECT_EQ(a["result"]["mean"]["text"], "n/(n - 1)");
  const auto b = Json("moments --balls 1 --cells 9 --order 2");
  EXPECT_EQ(b["result"]["mean"], "1");
  EXPECT_EQ(b["result"]["variance"], "0");
  EXPECT_EQ(b["result"]["scaled_defined"], false);
  const auto c = Json("moments --balls 4 --symbolic-n --order 1");
  EXPECT_EQ(c["result"]["mean"]["text"], "(n^4 + 7*n^3 - 2*n^2)/(n^4 + n^3 - 3*n^2 - n + 2)");
  const auto d = Json("moments --balls 2 --cells 2 --order 4");
  EXPECT_EQ(d["result"]["scaled"][0]["squared"], "9/2");
  EXPECT_EQ(d["result"]["scaled"][1]["exact"], "19/2");
}

TEST(Cli, Approx) {
  const auto a = Json("approx --cells 2 --balls 50");
  EXPECT_EQ(a["result"]["error"], "0");
  const auto b = Json("approx --cells 3 --limit");
  const std::string v = b["result"]["limit"];
  EXPECT_EQ(v.substr(0, 12), "0.0421365838");
}

TEST(Cli, Geo) {
  EXPECT_EQ(Json("geo --alpha 1/2 --r 3")["result"]["mean"], "14");
  const auto lim = Json("geo --alpha 1/2 --limits");
  EXPECT_EQ(lim["result"]["limits"]["kurtosis"], "33/5");
  EXPECT_EQ(lim["result"]["limits"]["cv_squared"], "1/3");
  const auto ord = Json("geo --alpha 1/2 --r 1 --order 2");
  EXPECT_EQ(ord["result"]["central"][0], "2");

  const std::string path = std::string(::testing::TempDir()) + "steps.txt";
  std::ofstream(path) << "1/2 1/2\n1/4\n";
  const auto t = Json("geo --table " + path + " --r 3");
  EXPECT_EQ(t["result"]["mean"], "8");
  EXPECT_EQ(RunCli("geo --table " + path + " --r 4").exitCode, 2);
}

TEST(Cli, Simulate) {
  const auto a = Json("simulate --balls 1 --cells 5 --trials 100 --seed 7");
  EXPECT_EQ(a["result"]["histogram"], nlohmann::json::parse(R"({"1":100})"));
  const auto v = Json("simulate --balls 1000 --cells 1000 --trials 10 --seed 1 --verbose");
  ASSERT_EQ(v["result"]["traces"].size(), 10u);
  for (const auto& trace : v["result"]["traces"]) {
    long balls = 1000;
    for (const auto& round : trace["rounds"]) {
      EXPECT_EQ(round["balls_before"], balls);
      balls -= round["captured"].get<long>();
    }
    EXPECT_EQ(balls, 0);
  }
  const auto g = Json("simulate --balls 3 --cells 3 --trials 20000 --seed 11 --gof");
  EXPECT_EQ(g["result"]["gof"]["passes"], true);
}

TEST(Cli, Deterministic) {
  const std::string args = "simulate --balls 12 --cells 9 --trials 500 --seed 42 --verbose";
  const auto a = RunCli(args);
  const auto b = RunCli(args);
  EXPECT_EQ(StripTiming(a.out), StripTiming(b.out));
  const auto c = RunCli("simulate --balls 12 --cells 9 --trials 500 --seed 42 --threads 1");
  const auto d = RunCli("simulate --balls 12 --cells 9 --trials 500 --seed 42 --threads 4");
  EXPECT_EQ(nlohmann::json::parse(c.out)["result"], nlohmann::json::parse(d.out)["result"]);
}

TEST(Cli, JsonRoundTrips) {
  for (const char* args : {"pgf --balls 4 --symbolic-n", "moments --balls 3 --cells 4 --order 5",
                           "approx --cells 4 --balls 12", "transition --symbolic-n --balls 3",
                           "distribution --balls 3 --cells 3 --kmax 6", "diagonal --rmax 6"}) {
    const auto r = RunCli(args);
    ASSERT_EQ(r.exitCode, 0) << args;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.dump(2) + "\n", r.out) << args;
    EXPECT_EQ(nlohmann::json::parse(j["result"].dump()), j["result"]);
  }
}

TEST(Cli, Verify) {
  const auto r = RunCli("verify --suite paper --format text");
  EXPECT_EQ(r.exitCode, 0);
  EXPECT_NE(r.out.find("F_{5,5}(x)"), std::string::npos);
  EXPECT_NE(r.out.find("M_n(5)"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(RunCli("verify --suite oracle").exitCode, 0);
  EXPECT_EQ(RunCli("verify --suite stats --budget small").exitCode, 0);
}

}  // namespace
