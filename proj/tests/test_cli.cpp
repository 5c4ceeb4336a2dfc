#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "coxeterlab/fixtures.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + COXETERLAB_CLI + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string last_line(const std::string& s) {
  std::string t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.rfind('\n') == std::string::npos ? 0 : t.rfind('\n') + 1);
}

const std::string kFixtures = COXETERLAB_FIXTURE_DIR;

}  // namespace

TEST(Cli, ClassifyFixtureFile) {
  const auto r = run("classify " + kFixtures + "/s1.cox --assign rho=2");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["class"], "Superhyperbolic");
  EXPECT_EQ(j["inertia"]["neg"], 2);
  const auto h4 = nlohmann::json::parse(run("classify fixture:h4").out);
  EXPECT_EQ(h4["class"], "Elliptic");
}

TEST(Cli, ClassifyParabolicTriangle) {
  const auto path = std::filesystem::temp_directory_path() / "coxeterlab_g2.cox";
  std::ofstream(path) << "vertices: a b c\nedge a b label=3\nedge b c label=6\n";
  const auto r = run("classify " + path.string());
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["class"], "Parabolic");
  EXPECT_EQ(j["parabolic"].size(), 1u);
}

TEST(Cli, CertifyPrintsExactDeterminants) {
  auto j = nlohmann::json::parse(run("certify " + kFixtures + "/s1.cox").out);
  EXPECT_EQ(j["det"], "(1/16)*(4*sqrt2*rho^2 - 2*sqrt2 - 1)");
  EXPECT_EQ(j["verdict"], "superhyperbolic");
  j = nlohmann::json::parse(run("certify " + kFixtures + "/u.cox").out);
  EXPECT_EQ(j["det"], "(1/64)*(12*sqrt2*rho^2 + 4*sqrt2*rho - 5*sqrt2 - 6)");
  EXPECT_EQ(run("certify fixture:l237").code, 4);
}

TEST(Cli, Nikulin) {
  auto r = run("nikulin --dim 13");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["report"]["contradiction"], true);
  EXPECT_EQ(j["report"]["A_d_1_2"], "13/3");
  j = nlohmann::json::parse(run("nikulin --dim 12").out);
  EXPECT_EQ(j["report"]["contradiction"], false);
  EXPECT_EQ(run("nikulin --dim 2").code, 2);
}

TEST(Cli, SearchEmptiness) {
  for (const std::string args : {"--order 4 --extra 3", "--order 5 --extra 3", "--order 3 --extra 5"}) {
    const auto r = run("search --mode expansion " + args + " --jobs 2");
    ASSERT_EQ(r.code, 0) << args;
    EXPECT_EQ(nlohmann::json::parse(last_line(r.out))["status"], "EMPTY") << args;
  }
}

TEST(Cli, SearchProductAndDeterminism) {
  const auto a = run("search --mode product --orders 2,2 --no-inter-edges --allow-unlinked");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(nlohmann::json::parse(last_line(a.out))["count"], 1);
  const auto b = run("search --mode product --orders 3,2 --cap 5 --jobs 3");
  const auto c = run("search --mode product --orders 3,2 --cap 5 --jobs 1");
  // Node counts in the summary depend on how the tree is split across workers.
  const auto body = [](const std::string& s) { return s.substr(0, s.rfind('\n', s.size() - 2)); };
  EXPECT_EQ(body(b.out), body(c.out));
  EXPECT_EQ(run("search --mode product --orders 5,5,3").code, 3);
  EXPECT_EQ(run("search --mode product --orders 2,x").code, 2);
}

TEST(Cli, ErrorsAndConfig) {
  EXPECT_EQ(run("classify /nonexistent.cox").code, 2);
  EXPECT_EQ(run("classify fixture:s1").code, 2);  // rho unassigned
  EXPECT_EQ(run("nikulin --dim 13", "COXETERLAB_LEVEL_CAP=abc").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("search --mode product --orders 2,2 --cap 10", "COXETERLAB_LEVEL_CAP=5").code, 0);
}

TEST(Cli, CatalogDump) {
  const auto r = run("catalog --table 3");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j.size(), 100u);
}

TEST(Fixtures, ExportedFilesMatchBuiltins) {
  for (const auto& name : coxeterlab::fixture_names()) {
    std::ifstream in(kFixtures + "/" + name + ".cox");
    ASSERT_TRUE(in.good()) << name;
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), coxeterlab::fixture_text(name)) << name;
  }
}
