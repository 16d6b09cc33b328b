#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"
#include "patgf/json_io.hpp"

#ifndef PATGF_CLI_PATH
#error "PATGF_CLI_PATH must name the patgf executable"
#endif

namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" PATGF_CLI_PATH "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Cli, Count) {
  EXPECT_EQ(run("count --avoid \"123;213\" --n 4 --implicit-132").out, "5\n");
  EXPECT_EQ(run("count --n 4").out, "24\n");
  EXPECT_EQ(run("count --avoid eps --n 1").out, "0\n");
  EXPECT_EQ(run("count --avoid 123 --n 4").out, "14\n");
}

TEST(Cli, Series) {
  EXPECT_EQ(run("series --avoid \"123;213\" --implicit-132 --order 6").out, "1,1,2,3,5,8,13\n");
  EXPECT_EQ(run("series --exactly-once 12 --order 4").out, "0,0,1,2,3\n");
}

TEST(Cli, Gf) {
  EXPECT_EQ(run("gf catalog:ulk --k 4 --l 2").out, "(1 - x - x^2)/(1 - 2*x - x^2)\n");
  EXPECT_EQ(run("gf recurrence --avoid 231").out, "(1 - x)/(1 - 2*x)\n");
  EXPECT_EQ(run("gf catalog:ulk-once --k 3 --l 1").out, "x^3/(1 - 4*x + 4*x^2)\n");
  EXPECT_EQ(run("gf catalog:u2k-both --k 3").out, "0\n");
  EXPECT_EQ(run("gf recurrence --avoid 231 --order 5").out, "(1 - x)/(1 - 2*x)\n1,1,2,4,8,16\n");
}

TEST(Cli, Table) {
  EXPECT_EQ(run("table --family ulk --l 1 --k 3 --order 5").out, "k=3 l=1\t1,1,2,4,8,16\n");
  EXPECT_EQ(run("table --family ulk --l 2 --k 3 --order 5").out, "k=3 l=2\t1,1,2,3,5,8\n");
  EXPECT_EQ(run("table --family u2k-both --k 3 --order 6").out, "k=3\t0,0,0,0,0,0,0\n");
}

TEST(Cli, JsonRoundTrip) {
  for (const char* args : {"gf catalog:ulk --k 4 --l 2 --json", "gf recurrence --avoid \"2341;3241\" --order 8 --json",
                           "gf catalog:ulk-once --k 5 --l 2 --json"}) {
    const CliRun r = run(args);
    ASSERT_EQ(r.status, 0) << args;
    const auto j = nlohmann::json::parse(r.out);
    const auto f = patgf::rationalFunctionFromJson(j);
    const nlohmann::json original{{"den", j["den"]}, {"num", j["num"]}};
    EXPECT_EQ(patgf::toJson(f).dump(), original.dump());
    EXPECT_EQ(f.toString(), j["text"].get<std::string>());
    EXPECT_EQ(nlohmann::json::parse(r.out).dump() + "\n", r.out);
  }
  for (const char* args : {"table --family ulk --k 3..5 --l 1..2 --order 6 --json", "count --n 5 --json",
                           "series --avoid 231 --json"}) {
    const CliRun r = run(args);
    ASSERT_EQ(r.status, 0) << args;
    EXPECT_EQ(nlohmann::json::parse(r.out).dump() + "\n", r.out) << args;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("count --avoid 1x --n 3").status, 2);
  EXPECT_EQ(run("count --n 3 --bogus").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("count --n 3 series").status, 2);
  EXPECT_EQ(run("count --n 11").status, 3);
  EXPECT_EQ(run("count --n 5", "PATGF_MAX_N=4").status, 3);
  EXPECT_EQ(run("count --n 5", "PATGF_MAX_N=6").status, 0);
  EXPECT_EQ(run("gf catalog:ulk --k 2 --l 5").status, 4);
  EXPECT_EQ(run("gf catalog:u2k-both --k 2").status, 4);
  EXPECT_EQ(run("gf recurrence").status, 4);
  EXPECT_EQ(run("gf nowhere").status, 2);
  EXPECT_EQ(run("verify --suite chebyshev --order 12").status, 0);
  EXPECT_EQ(run("verify --suite nonsense").status, 2);
  EXPECT_EQ(run("verify --max-n 11").status, 3);
}

TEST(Cli, EngineErrorNamesTheError) {
  const std::string cmd = "\"" PATGF_CLI_PATH "\" gf catalog:ulk --k 2 --l 5 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  std::array<char, 512> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  EXPECT_NE(out.find("PreconditionViolated"), std::string::npos) << out;
}

TEST(Cli, VerifyReportShape) {
  const CliRun r = run("verify --suite catalog");
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["suite"], "catalog");
  EXPECT_TRUE(j["passed"].get<bool>());
  ASSERT_FALSE(j["checks"].empty());
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("name") && c.contains("status") && c.contains("expected") && c.contains("actual"));
  }
}
