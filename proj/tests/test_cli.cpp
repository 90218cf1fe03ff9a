#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(WCLIE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "wclie_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, ChiSummary) {
  auto r = run("chi --catalog paper_example_1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "14 / 10 / 6 / 5 / 1\n");
}

TEST(Cli, ChiNotStabilized) { EXPECT_EQ(run("chi --catalog free_nilpotent 2 3 --max-class 4").code, 2); }

TEST(Cli, ChiMissingInput) { EXPECT_EQ(run("chi --input missing.json").code, 1); }

TEST(Cli, BadUsage) {
  EXPECT_EQ(run("chi").code, 1);
  EXPECT_EQ(run("chi --catalog nonsense").code, 1);
  EXPECT_EQ(run("chi --catalog abelian two").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("chi --catalog sl2 --format yaml").code, 1);
}

TEST(Cli, UnsupportedClass) {
  auto path = scratch("gl2.json");
  // sl2 + abelian(1): neither nilpotent nor perfect
  std::ofstream(path) << R"({"name":"gl2","dim":4,"basis":["e","h","f","c"],"brackets":[
    {"i":0,"j":1,"terms":[{"k":0,"c":"-2"}]},{"i":0,"j":2,"terms":[{"k":1,"c":"1"}]},
    {"i":1,"j":2,"terms":[{"k":2,"c":"-2"}]}]})";
  EXPECT_EQ(run("chi --input " + path.string()).code, 3);
  EXPECT_EQ(run("verify --input " + path.string()).code, 3);
}

TEST(Cli, ChiJsonOutputIsDeterministic) {
  auto a = scratch("a.json"), b = scratch("b.json");
  ASSERT_EQ(run("chi --catalog heisenberg 3 --output " + a.string()).code, 0);
  ASSERT_EQ(run("chi --catalog heisenberg 3 --output " + b.string()).code, 0);
  auto sa = slurp(a);
  EXPECT_FALSE(sa.empty());
  EXPECT_EQ(sa, slurp(b));
  EXPECT_NE(sa.find("\"max_class\": 6"), std::string::npos);
}

TEST(Cli, HomologyAbelianFour) {
  auto r = run("homology --catalog abelian 4 --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\n  \"agree\": true,\n  \"h1\": 4,\n  \"h2_ce\": 6,\n  \"h2_exterior\": 6,\n  \"h2_hopf\": 6\n}\n");
}

TEST(Cli, HomologySl2) {
  auto r = run("homology --catalog sl2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("h2_hopf = n/a"), std::string::npos);
}

TEST(Cli, HomologyFaultInjectedExitsFour) {
  auto path = scratch("bad.json");
  std::ofstream(path) << R"({"name":"bad","dim":3,"brackets":[
    {"i":0,"j":1,"terms":[{"k":2,"c":"1"}]},{"i":0,"j":2,"terms":[{"k":0,"c":"1"}]}]})";
  EXPECT_EQ(run("homology --input " + path.string()).code, 1);
  EXPECT_EQ(run("homology --unchecked --input " + path.string()).code, 4);
}

TEST(Cli, VerifyCatalog) {
  EXPECT_EQ(run("verify --catalog abelian 3").code, 0);
  auto r = run("verify --catalog free_nilpotent 3 2 --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"all_passed\": true"), std::string::npos);
  auto s = run("verify --catalog sl2");
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("C11 pass"), std::string::npos);
}

TEST(Cli, InputFileRoundTrip) {
  auto path = scratch("p1.json");
  ASSERT_EQ(run("catalog --catalog paper_example_1 --output " + path.string()).code, 0);
  EXPECT_EQ(run("chi --input " + path.string()).out, "14 / 10 / 6 / 5 / 1\n");
}

TEST(Cli, CatalogListing) {
  auto r = run("catalog --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"upper_triangular_nil\""), std::string::npos);
}

TEST(Cli, BudgetFromEnvironment) {
  auto r = run("chi --catalog free_nilpotent 3 2");
  EXPECT_EQ(r.code, 0);
  std::string cmd = std::string("CHI_LIE_BUDGET=10 ") + WCLIE_CLI_PATH + " chi --catalog free_nilpotent 3 2 >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}
