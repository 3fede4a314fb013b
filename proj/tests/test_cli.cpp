#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + WM_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Cli, Pi) {
  CliRun r = run("pi --word abAB");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["pi"], 2);
  EXPECT_EQ(j["c_w"], 1);
  EXPECT_EQ(j["schema"], "v1");
  EXPECT_TRUE(j.contains("seed"));
  EXPECT_EQ(nlohmann::json::parse(run("pi --word ab").out)["pi"], "inf");
}

TEST(Cli, StableSnZero) {
  CliRun r = run("stable-sn --word ab --mu 1");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["ratfun"]["num"].empty());
  EXPECT_EQ(j["beta"], "inf");
  j = nlohmann::json::parse(run("stable-sn --word abAB --mu 1 --eval 3").out);
  EXPECT_EQ(j["value"], "1/2");
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(nlohmann::json::parse(run("quotients --word abAB").out)["count"], 7);
  EXPECT_EQ(nlohmann::json::parse(run("chi-alg --words aa,bb").out)["chi_alg"], 0);
  EXPECT_EQ(nlohmann::json::parse(run("stable-wreath --group C2 --word aa --arrm sign:1 --eval 2").out)["value"], "1");
  EXPECT_EQ(nlohmann::json::parse(run("induction --group C2 --word abAB --arrm 'sign:1,1' --route surj").out)["route"],
            "surj");
  EXPECT_EQ(nlohmann::json::parse(run("beta --word abAB --mu 1").out)["beta"], "1");
  EXPECT_EQ(nlohmann::json::parse(run("spi-bound --word aa --dmax 1 --mod 2").out)["overall_upper_bound"], "0");
  EXPECT_EQ(nlohmann::json::parse(run("spi-bound --word abAB --dmax 1 --phi S3:std").out)["overall_upper_bound"], "1");
  EXPECT_EQ(run("core-graph --words abAB --format text").status, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("no-such-command").status, 2);
  EXPECT_EQ(run("pi --word ab1").status, 2);
  EXPECT_EQ(run("pi --word abc --rank 2").status, 2);
  EXPECT_EQ(run("pi").status, 2);
  EXPECT_EQ(run("stable-sn --word aa --mu 1 --eval 1").status, 2);
  EXPECT_EQ(run("stable-wreath --group C5 --word aa --arrm sign:1").status, 2);
  EXPECT_EQ(run("quotients --word abAB --vertex-limit 2").status, 3);
}

TEST(Cli, DeterministicOutput) {
  for (const char* args : {"spi-bound --word abAB --dmax 2", "verify --only 2,3 --seed 9", "chi-alg --words abAB,abAB"}) {
    CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
  auto j = nlohmann::json::parse(run("verify --only 2 --seed 9").out);
  EXPECT_EQ(j["seed"], 9);
  EXPECT_EQ(j["passed"], true);
  EXPECT_FALSE(j["criteria"][0].contains("seconds"));
}

TEST(Cli, MutatedVerifyReportsMismatch) {
  CliRun r = run("verify --only 1 --mutate");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["criteria"][0]["passed"], false);
}

TEST(Cli, CacheFromEnvironment) {
  auto path = std::filesystem::temp_directory_path() / "wm_cli_cache.bin";
  std::filesystem::remove(path);
  CliRun a = run("stable-sn --word aabb --mu 1", "WM_CACHE=" + path.string());
  EXPECT_EQ(a.status, 0);
  EXPECT_TRUE(std::filesystem::exists(path));
  CliRun b = run("stable-sn --word aabb --mu 1", "WM_CACHE=" + path.string());
  EXPECT_EQ(a.out, b.out);
  std::filesystem::remove(path);
}
