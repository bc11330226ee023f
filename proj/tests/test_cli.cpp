#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const char* bin = std::getenv("BWALG_CLI");
  if (!bin) throw std::runtime_error("BWALG_CLI not set");
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (size_t k = fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), k);
  int st = pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST(Cli, EnumerateJson) {
  auto r = run("enumerate --u 8 --s 3 --m 1 --format json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 7u);
  EXPECT_EQ(j[0]["eta"], "(1,1,1,1,1,1,0,1,0,1|0)");
  for (auto& rec : j) EXPECT_EQ(rec["alist"].size(), 8u);
}

TEST(Cli, EnumerateCsvHasHeader) {
  auto r = run("enumerate --u 5 --s 2 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("index,eta,necklace,alist,h\n", 0), 0u);
}

TEST(Cli, ModularJson) {
  auto r = run("modular --u 8 --s 3 --m 0 --format json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["c"], "-23");
  EXPECT_EQ(j["S"].size(), 7u);
  EXPECT_EQ(j["T"].size(), 7u);
  EXPECT_TRUE(j.contains("S_exact"));
}

TEST(Cli, OutputIsDeterministic) {
  auto a = run("modular --u 7 --s 3 --format json --threads 1");
  auto b = run("modular --u 7 --s 3 --format json --threads 2");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, FusionCsv) {
  auto r = run("fusion --u 5 --s 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("i,j,k,N\n", 0), 0u);
}

TEST(Cli, CharacterByEta) {
  auto r = run("character --u 8 --s 3 --eta 6,1\\|1 --order 10");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(6,1|1)"), std::string::npos);
}

TEST(Cli, VerifySuite) {
  auto r = run("verify --suite thm4_12 --u 5 --s 2");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("enumerate --u 6 --s 3").code, 2);
  EXPECT_EQ(run("verify --suite nope").code, 2);
  EXPECT_EQ(run("modular --u 5 --s 2 --p 1").code, 2);
  EXPECT_EQ(run("character --u 8 --s 3 --eta 9,9\\|9").code, 2);
}
