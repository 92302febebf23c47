#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(SRLW_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, p)) r.out += buf;
  const int raw = ::pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "srlw_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, NoArgumentsIsUsageError) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("bogus-command").status, 2);
  EXPECT_EQ(run("evolve --nope=1").status, 2);
  EXPECT_EQ(run("evolve --M=7").status, 2);
}

TEST(Cli, IllposednessRows) {
  const auto path = scratch("r.csv");
  const auto r = run("illposedness --s=-0.5 --t=0.5 --N=32,64,128,256 --out=" + path.string());
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("illposedness:"), std::string::npos);
  const std::string csv = slurp(path);
  EXPECT_EQ(csv.rfind("# illposedness", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
}

TEST(Cli, EvolveIsDeterministic) {
  const auto a = scratch("e1.csv"), b = scratch("e2.csv");
  EXPECT_EQ(run("evolve --l=20 --M=256 --dt=0.01 --T=10 --init=gaussian --out=" + a.string()).status, 0);
  EXPECT_EQ(run("evolve --l=20 --M=256 --dt=0.01 --T=10 --init=gaussian --out=" + b.string()).status, 0);
  const std::string ca = slurp(a);
  // Config lines differ only in the output path.
  EXPECT_EQ(ca.substr(ca.find('\n')), slurp(b).substr(ca.find('\n')));
  EXPECT_NE(ca.find("t,E,V,I1,I2"), std::string::npos);
}

TEST(Cli, ConfigFileWithOverride) {
  const auto cfg = scratch("c.toml");
  std::ofstream(cfg) << "[illposedness]\nt=0.25\nN=[32,64]\n";
  const auto r = run("--config " + cfg.string() + " illposedness --s=-0.75");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("s=-0.75 t=0.25 N=32,64"), std::string::npos);
  const auto bad = scratch("bad.toml");
  std::ofstream(bad) << "unknown_key=1\n";
  EXPECT_EQ(run("--config " + bad.string() + " illposedness").status, 2);
}

TEST(Cli, BoundChecksExitCleanly) {
  EXPECT_EQ(run("boundary-bound --l=5,10 --T=0.5 --out=" + scratch("b.csv").string()).status, 0);
  EXPECT_EQ(run("decay --l=20 --T=0.5 --weight=exponential --param=0.5 --out=" + scratch("d.csv").string()).status, 0);
}
