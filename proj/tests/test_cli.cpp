// Runs the command-line tool and checks exit status and output.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(MODINV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST(Cli, IdentitiesPass) {
  for (const char* q : {"2", "3", "2^2", "5"}) {
    const CliRun r = run(std::string("identities --q ") + q);
    EXPECT_EQ(r.status, 0) << q;
    EXPECT_TRUE(contains(r.out, "16/16 identities PASS")) << r.out;
    EXPECT_FALSE(contains(r.out, "FAIL")) << r.out;
  }
  const CliRun r2 = run("identities --q 2");
  EXPECT_TRUE(contains(r2.out, "PASS  h-star-symmetry"));
}

TEST(Cli, IdentitiesJson) {
  const CliRun r = run("identities --q 3 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("identities").size(), 16u);
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_EQ(j.at("identities")[0].at("tag"), "u0-hypersurface");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("identities --q 6").status, 2);
  EXPECT_EQ(run("identities --q 3x").status, 2);
  EXPECT_EQ(run("identities").status, 2);
  EXPECT_EQ(run("--q 3").status, 2);
  EXPECT_EQ(run("dims --group u2 --q 2").status, 2);
  EXPECT_EQ(run("dims --group sl2 --q 2 --max-deg 40").status, 2);
  EXPECT_EQ(run("dims --group sl2 --q 2 --format xml").status, 2);
  EXPECT_EQ(run("basis-check --basis X --q 2").status, 2);
  EXPECT_EQ(run("trace --q 3 --poly \"x1\"").status, 2);
  EXPECT_EQ(run("trace --q 3 --poly \"x1 +\"").status, 2);
  EXPECT_EQ(run("nonmembership-h1 --q 2").status, 2);
  EXPECT_EQ(run("gorenstein --group sl2 --q 3 --format csv").status, 2);
}

TEST(Cli, DimsCsv) {
  const CliRun r = run("dims --group sl2 --q 2 --max-deg 12 --format csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, 29), "degree,dimension\n0,1\n1,0\n2,3\n");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 14);  // header + 13 rows
}

TEST(Cli, DimsJsonToFile) {
  const std::string path = testing::TempDir() + "modinv_dims.json";
  const CliRun r = run("dims --group gl2 --q 3 --max-deg 8 --format json --out " + path);
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  const auto j = nlohmann::json::parse(ss.str());
  EXPECT_EQ(j.at("dims"), nlohmann::json::parse("[1,0,1,0,3,0,5,0,10]"));
}

TEST(Cli, HilbertAndGorenstein) {
  const CliRun h = run("hilbert --group sl2 --q 3 --max-deg 6");
  EXPECT_EQ(h.status, 0);
  EXPECT_TRUE(contains(h.out, "expansion: 1 0 1 0 5 0 8")) << h.out;
  const CliRun hj = run("hilbert --group gl2 --q 3 --max-deg 4 --format json");
  EXPECT_EQ(nlohmann::json::parse(hj.out).at("series").at("denominator"), nlohmann::json::parse("[8,6,8,6]"));

  const CliRun g = run("gorenstein --group sl2 --q 3");
  EXPECT_EQ(g.status, 0);
  EXPECT_EQ(g.out, "i = 4\n");
  EXPECT_EQ(run("gorenstein --group gl2 --q 5").out, "i = 4\n");
}

TEST(Cli, BasisAndGenerators) {
  const CliRun b = run("basis-check --basis S --q 2 --max-deg 12");
  EXPECT_EQ(b.status, 0);
  EXPECT_TRUE(contains(b.out, "\nPASS\n")) << b.out;
  const CliRun bj = run("basis-check --basis D --q 3 --max-deg 8 --format json");
  EXPECT_EQ(bj.status, 0);
  EXPECT_EQ(nlohmann::json::parse(bj.out).at("verdict"), "PASS");
  const CliRun g = run("generators-check --group gl2 --q 3 --max-deg 12");
  EXPECT_EQ(g.status, 0);
  EXPECT_TRUE(contains(g.out, "PASS"));
  EXPECT_EQ(run("generators-check --group sl2 --q 3 --max-deg 10").status, 0);
}

TEST(Cli, NonmembershipAndTrace) {
  const CliRun n = run("nonmembership-h1 --q 3");
  EXPECT_EQ(n.status, 0);
  EXPECT_TRUE(contains(n.out, "contains h1:  no"));
  EXPECT_TRUE(contains(n.out, "contains h0:  yes"));

  const CliRun t = run("trace --q 3 --poly \"x1^3*y1 + x2^3*y2\"");
  EXPECT_EQ(t.status, 0);
  EXPECT_EQ(t.out, "x1^3*y1 + x2^3*y2\n");
  EXPECT_EQ(run("trace --q 3 --poly \"x2*x1^3 - x2^3*x1\"").out, "0\n");
}

TEST(Cli, OutputIsDeterministic) {
  const std::string args = "basis-check --basis P --q 3 --max-deg 8 --format json";
  EXPECT_EQ(run(args).out, run(args).out);
}
