#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(DRDP_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("drdp_cli_" + std::string(::testing::UnitTest::GetInstance()
                                          ->current_test_info()
                                          ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content = "") {
    fs::path p = dir_ / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }
  std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenThenSolveGrid) {
  std::string g = file("g.txt");
  ASSERT_EQ(run("gen grid 5 10 -o " + g).code, 0);
  CliRun r = run("solve " + g + " --formulation drdp1p");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("objective 38\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("status Optimal"), std::string::npos);
}

TEST_F(Cli, OracleOnP3) {
  CliRun r = run("oracle " + file("p3.txt", "3 2\n0 1\n1 2\n") + " --quantity gammaDR");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3\n0 3 0\n");
}

TEST_F(Cli, GreedyOnK2) {
  CliRun r = run("greedy " + file("k2.txt", "2 1\n0 1\n") + " --problem drdp");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "W1 4 W2 4");
}

TEST_F(Cli, ParamsAndBounds) {
  std::string g = file("g.txt");
  ASSERT_EQ(run("gen grid 5 10 -o " + g).code, 0);
  CliRun p = run("params " + g);
  EXPECT_NE(p.out.find("diameter 13\n"), std::string::npos);
  EXPECT_NE(p.out.find("girth 4\n"), std::string::npos);
  CliRun b = run("bounds " + g);
  EXPECT_NE(b.out.find("L3 30\n"), std::string::npos);
  EXPECT_NE(b.out.find("U2 62\n"), std::string::npos);
  CliRun t = run("params " + file("p4.txt", "4 3\n0 1\n1 2\n2 3\n"));
  EXPECT_NE(t.out.find("girth acyclic\n"), std::string::npos);
}

TEST_F(Cli, ModelWritesLpFile) {
  std::string lp = file("m.lp");
  CliRun r = run("model " + file("k2.txt", "2 1\n0 1\n") + " --formulation drdp2pp -o " + lp);
  EXPECT_EQ(r.code, 0);
  std::string text = slurp(lp);
  EXPECT_NE(text.find("0 <= r_0 <= 1"), std::string::npos);
  EXPECT_EQ(text.substr(text.size() - 4), "End\n");
}

TEST_F(Cli, ExitCodes) {
  std::string k2 = file("k2.txt", "2 1\n0 1\n");
  EXPECT_EQ(run("solve " + k2 + " --formulation drdp9").code, 2);
  EXPECT_EQ(run("solve " + k2).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("solve " + k2 + " --formulation drdp1 --strengthen").code, 2);
  EXPECT_EQ(run("oracle " + k2 + " --quantity gamma --codomain full").code, 2);
  EXPECT_EQ(run("solve " + (dir_ / "missing.txt").string() + " --formulation drdp1").code, 3);
  EXPECT_EQ(run("params " + file("bad.txt", "3 1\n2 1\n")).code, 3);
  EXPECT_EQ(run("oracle " + file("big.txt", "17 0\n") + " --quantity gamma").code, 2);
}

TEST_F(Cli, GeneratorsDeterministic) {
  std::string a = file("a.txt"), b = file("b.txt");
  ASSERT_EQ(run("gen gnp 30 0.3 --seed 9 -o " + a).code, 0);
  ASSERT_EQ(run("gen gnp 30 0.3 --seed 9 -o " + b).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  ASSERT_EQ(run("gen tree 40 --seed 2 -o " + a).code, 0);
  ASSERT_EQ(run("gen tree 40 --seed 2 -o " + b).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST_F(Cli, BenchWritesTables) {
  std::string csv = file("b.csv"), md = file("b.md");
  CliRun r = run("bench --suite tree --time-limit 1 --jobs 2 --csv " + csv + " --md " + md);
  EXPECT_EQ(r.code, 0);
  std::string text = slurp(csv);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 9 * 7);
  EXPECT_NE(slurp(md).find("| Tree-50-s1 |"), std::string::npos);
}
