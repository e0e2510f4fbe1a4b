#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "../tools/cli.hpp"
#include "pigeon/counts.hpp"
#include "pigeon/dimacs.hpp"
#include "pigeon/drat_io.hpp"
#include "pigeon/encodings.hpp"
#include "pigeon/proof_cook.hpp"
#include "pigeon/proof_ours.hpp"

namespace pigeon {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "pigeon");
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pigeon_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& contents) {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << contents;
    return p.string();
  }

  fs::path dir_;
};

TEST(CliTest, Usage) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gen-cnf", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gen-cnf", "two"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gen-cnf", "3", "--encoding", "sparse"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gen-proof", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gen-proof", "3", "--style", "other"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"count", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bench", "1"}).code, cli::kExitUsage);
  auto help = run({"--help"});
  EXPECT_EQ(help.code, cli::kExitOk);
  EXPECT_NE(help.out.find("gen-proof"), std::string::npos);
}

TEST(CliTest, GenCnf) {
  auto standard = run({"gen-cnf", "2", "--encoding", "standard"});
  EXPECT_EQ(standard.code, 0);
  EXPECT_EQ(standard.out, emit_dimacs(php_standard(2)));
  EXPECT_EQ(parse_dimacs(standard.out).clauses.size(), 9u);

  auto amo = run({"gen-cnf", "4", "--encoding", "amo"});
  EXPECT_EQ(amo.code, 0);
  EXPECT_EQ(amo.out, emit_dimacs(php_amo(4)));
  EXPECT_TRUE(amo.out.starts_with("p cnf 24 45\n"));

  for (int n : {1, 5, 17}) EXPECT_EQ(run({"gen-cnf", std::to_string(n)}).out,
                                     emit_dimacs(php_standard(n)));
}

TEST(CliTest, GenProof) {
  auto r = run({"gen-proof", "2", "--style", "ours"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 10u);
  EXPECT_EQ(r.out, emit_drat(generate_ours(2)));
  EXPECT_EQ(run({"gen-proof", "6", "--style", "cook", "--deletions"}).out,
            emit_drat(generate_cook(6, {true})));
}

TEST(CliTest, GenProofHundredHoles) {
  auto r = run({"gen-proof", "100", "--style", "ours"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 2456527u);
}

TEST(CliTest, Count) {
  EXPECT_EQ(run({"count", "100", "--style", "ours"}).out, "2456527\n");
  EXPECT_EQ(run({"count", "100", "--style", "cook"}).out, "26169100\n");
  EXPECT_EQ(run({"count", "100"}).out, "2456527\n");
  EXPECT_EQ(run({"count", "3", "--style", "ours", "--breakdown"}).out,
            "k=2 definitions=20 group=6 alo=3 subtotal=29\n"
            "k=1 definitions=6 group=1 alo=2 subtotal=9\n"
            "empty=1\n"
            "total=39\n");
  EXPECT_EQ(run({"count", "2", "--style", "cook", "--breakdown"}).out,
            "k=1 definitions=8 pair=2 alo=2 subtotal=12\nempty=1\ntotal=13\n");
}

TEST(CliTest, Bench) {
  auto r = run({"bench", "6"});
  ASSERT_EQ(r.code, 0);
  std::string expected = "n,ours,cook\n";
  for (int n = 2; n <= 6; ++n)
    expected += std::to_string(n) + "," + std::to_string(count_ours(n)) + "," +
                std::to_string(count_cook(n)) + "\n";
  EXPECT_EQ(r.out, expected);
  EXPECT_EQ(run({"bench", "6"}).out, r.out);
  EXPECT_EQ(run({"bench", "6", "--closed-form"}).out, r.out);
  EXPECT_EQ(run({"bench", "4", "--styles", "cook"}).out,
            "n,cook\n2,13\n3," + std::to_string(count_cook(3)) + "\n4," +
                std::to_string(count_cook(4)) + "\n");
}

TEST(CliTest, BenchRowsAndRatioTrend) {
  auto r = run({"bench", "200", "--closed-form"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,ours,cook");
  std::map<int, double> ratio;
  double last = 0;
  while (std::getline(in, line)) {
    int n = 0;
    long long ours = 0, cook = 0;
    ASSERT_EQ(std::sscanf(line.c_str(), "%d,%lld,%lld", &n, &ours, &cook), 3) << line;
    EXPECT_LT(ours, cook) << line;
    if (n == 100) {
      EXPECT_EQ(line, "100,2456527,26169100");
    }
    ratio[n] = static_cast<double>(cook) / static_cast<double>(ours);
    if (n > 2) {
      EXPECT_GT(ratio[n], last) << line;
    }
    last = ratio[n];
  }
  const double trend = ratio.at(200) / ratio.at(100);
  EXPECT_GE(trend, 1.8);
  EXPECT_LE(trend, 2.2);
}

TEST(CliTest, BenchVerifies) {
  auto r = run({"bench", "5", "--verify-up-to", "5", "-j", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.err), 8u);
  EXPECT_NE(r.err.find("verify n=5 style=cook ACCEPTED"), std::string::npos);
}

TEST_F(CliFiles, CheckAccepts) {
  auto cnf = write("php8.cnf", emit_dimacs(php_standard(8)));
  auto drat = write("php8.drat", emit_drat(generate_ours(8)));
  auto r = run({"check", cnf, drat});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ACCEPTED\n");
  EXPECT_NE(r.err.find("proof lines"), std::string::npos);
}

TEST_F(CliFiles, CheckCookWithDeletions) {
  auto cnf = write("php5.cnf", run({"gen-cnf", "5"}).out);
  auto drat = write("php5.drat", run({"gen-proof", "5", "--style", "cook", "--deletions"}).out);
  auto r = run({"check", cnf, drat, "--strict-deletions"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST_F(CliFiles, CheckTruncated) {
  auto cnf = write("php4.cnf", emit_dimacs(php_standard(4)));
  auto p = generate_ours(4);
  p.lines.pop_back();
  auto drat = write("php4.drat", emit_drat(p));
  auto r = run({"check", cnf, drat});
  EXPECT_EQ(r.code, cli::kExitFailed);
  EXPECT_EQ(r.out.rfind("INCOMPLETE", 0), 0u);
}

TEST_F(CliFiles, CheckCorruptedPivot) {
  const int n = 5;
  auto plan = IterationPlan::first(n);
  const auto index = definition_clauses(plan).size() + y_definition_clauses(plan).size();
  auto p = generate_ours(n);
  std::vector<Literal> lits(p.lines[index].clause.begin(), p.lines[index].clause.end());
  lits[0] = ~lits[0];
  p.lines[index].clause = Clause(lits);

  auto cnf = write("php.cnf", emit_dimacs(php_standard(n)));
  auto drat = write("php.drat", emit_drat(p));
  auto r = run({"check", cnf, drat});
  EXPECT_EQ(r.code, cli::kExitFailed);
  EXPECT_EQ(r.out.rfind("REJECTED at line " + std::to_string(index + 1) + ":", 0), 0u) << r.out;
}

TEST_F(CliFiles, CheckInputErrors) {
  auto cnf = write("bad.cnf", "p cnf 1 1\n2 0\n");
  auto drat = write("ok.drat", "0\n");
  auto r = run({"check", cnf, drat});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"check", (dir_ / "missing.cnf").string(), drat}).code, cli::kExitUsage);

  auto good = write("good.cnf", emit_dimacs(php_standard(2)));
  auto bad_proof = write("bad.drat", "d 0\n");
  EXPECT_EQ(run({"check", good, bad_proof}).code, cli::kExitUsage);
}

TEST_F(CliFiles, OutputOption) {
  const auto path = (dir_ / "out.drat").string();
  auto r = run({"gen-proof", "4", "--style", "cook", "-o", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(path), emit_drat(generate_cook(4)));
}

TEST(CliGoldenTest, MatchesCheckedInFiles) {
  const fs::path golden = PIGEON_GOLDEN_DIR;
  for (int n = 2; n <= 4; ++n) {
    const auto s = std::to_string(n);
    EXPECT_EQ(run({"gen-cnf", s}).out, read_file(golden / ("php_standard_" + s + ".cnf"))) << n;
    EXPECT_EQ(run({"gen-cnf", s, "--encoding", "amo"}).out,
              read_file(golden / ("php_amo_" + s + ".cnf")))
        << n;
    EXPECT_EQ(run({"gen-proof", s}).out, read_file(golden / ("ours_" + s + ".drat"))) << n;
    EXPECT_EQ(run({"gen-proof", s, "--style", "cook"}).out,
              read_file(golden / ("cook_" + s + ".drat")))
        << n;
    EXPECT_EQ(run({"gen-proof", s, "--deletions"}).out,
              read_file(golden / ("ours_deletions_" + s + ".drat")))
        << n;
  }
}

}  // namespace
}  // namespace pigeon
