#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "gardenhose/cli.hpp"
#include "oracles.hpp"

using namespace gardenhose;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ghtool_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& content) const {
    write_file(path(name), content);
    return path(name);
  }

  fs::path dir_;
};

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_F(Cli, BuildThenVerify) {
  const auto b = run({"build", "--family", "xor", "--n", "1", "--out", path("x.ghs")});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_NE(b.out.find("pipes: 3"), std::string::npos);
  const auto v = run({"verify", "--strategy", path("x.ghs"), "--table", write("x.ghf", format_ghf(xor_table(1)))});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "result: ok\n");
}

TEST_F(Cli, BuildWritesReparseableFiles) {
  for (const char* family : {"xor", "eq", "ip", "maj"}) {
    ASSERT_EQ(run({"build", "--family", family, "--n", "3", "--out", path("s.ghs")}).code, 0);
    const Strategy s = parse_ghs(read_file(path("s.ghs")));
    EXPECT_EQ(format_ghs(s), read_file(path("s.ghs")));
  }
  EXPECT_EQ(parse_ghs(read_file(path("s.ghs"))), build_maj(3));
  const auto g = run({"build", "--family", "generic", "--table", write("a.ghf", format_ghf(and_table())), "--out", path("g.ghs")});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(parse_ghs(read_file(path("g.ghs"))), build_generic(and_table()));
  const auto p = run({"build", "--family", "protocol", "--tree", std::string(GH_DATA_DIR) + "/xor1.ghp"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_FALSE(verify(parse_ghs(p.out), xor_table(1)).has_value());
}

TEST_F(Cli, BuildNeedsItsParameters) {
  EXPECT_EQ(run({"build", "--family", "eq"}).code, 2);
  EXPECT_EQ(run({"build", "--family", "generic", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"build", "--family", "nope", "--n", "1"}).code, 2);
}

TEST_F(Cli, EvalTrace) {
  const std::string s = write("x.ghs", format_ghs(build_xor(1)));
  const auto plain = run({"eval", "--strategy", s, "--x", "1", "--y", "0"});
  EXPECT_EQ(plain.out, "exit: bob\nbit: 1\nhops: 1\n");
  for (const char* x : {"0", "1"}) {
    for (const char* y : {"0", "1"}) {
      const auto t = run({"eval", "--strategy", s, "--x", x, "--y", y, "--trace"});
      const int hops = evaluate(build_xor(1), parse_bits(x, 1), parse_bits(y, 1)).hops;
      EXPECT_EQ(line_count(t.out), static_cast<std::size_t>(hops + 1));
    }
  }
  const auto t = run({"eval", "--strategy", s, "--x", "1", "--y", "0", "--trace"});
  EXPECT_EQ(t.out, "start tap\nhop 1: tap -> pipe 2 -> bob:2 (open), exit bob\n");
  EXPECT_EQ(run({"eval", "--strategy", s, "--x", "10", "--y", "0"}).code, 2);
}

TEST_F(Cli, VerifyFailures) {
  const std::string s = write("x.ghs", format_ghs(build_xor(1)));
  const auto cex = run({"verify", "--strategy", s, "--table", write("a.ghf", format_ghf(and_table()))});
  EXPECT_EQ(cex.code, 1);
  EXPECT_EQ(cex.out, "result: counterexample\nx: 0\ny: 1\ngot: bob\nwant: 0\n");
  const auto mismatch = run({"verify", "--strategy", s, "--table", write("e.ghf", format_ghf(eq_table(2)))});
  EXPECT_EQ(mismatch.code, 2);
  EXPECT_NE(mismatch.err.find("DIMENSION_MISMATCH"), std::string::npos);
  const auto bad = run({"verify", "--strategy", s, "--table", write("bad.ghf", "ghf 1 1\n0a\n10\n")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2, column 2"), std::string::npos) << bad.err;
  EXPECT_EQ(run({"verify", "--strategy", path("missing.ghs"), "--table", path("bad.ghf")}).code, 2);
}

TEST_F(Cli, Oracle) {
  const std::string t = write("x.ghf", format_ghf(xor_table(1)));
  const auto ok = run({"oracle", "--table", t, "--max-pipes", "5", "--out", path("w.ghs")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("s_min: 3\n"), std::string::npos);
  EXPECT_FALSE(verify(parse_ghs(read_file(path("w.ghs"))), xor_table(1)).has_value());
  const auto capped = run({"oracle", "--table", t, "--max-pipes", "2"});
  EXPECT_EQ(capped.code, 1);
  EXPECT_NE(capped.out.find("lower_bound: 3"), std::string::npos);
  EXPECT_EQ(run({"oracle", "--table", t, "--max-pipes", "9"}).code, 2);
  EXPECT_EQ(run({"oracle", "--table", t, "--max-pipes", "9", "--no-caps"}).code, 0);
}

TEST_F(Cli, SatRoundTrip) {
  const std::string t = write("x.ghf", format_ghf(xor_table(1)));
  ASSERT_EQ(run({"sat-encode", "--table", t, "--pipes", "3", "--out", path("x.cnf")}).code, 0);
  const CNFInstance cnf = parse_dimacs(read_file(path("x.cnf")));
  EXPECT_EQ(cnf.varmap, parse_varmap(read_file(path("x.cnf.varmap"))));
  const auto model = oracle::Dpll(cnf.variables, cnf.clauses).solve();
  ASSERT_TRUE(model.has_value());
  std::string text = "s SATISFIABLE\nv";
  for (int l : *model) text += " " + std::to_string(l);
  text += " 0\n";
  const auto d = run({"sat-decode", "--model", write("x.model", text), "--varmap", path("x.cnf.varmap"), "--out", path("d.ghs")});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(run({"verify", "--strategy", path("d.ghs"), "--table", t}).code, 0);
  const auto bad = run({"sat-decode", "--model", write("bad.model", "v 1 2 3 0\n"), "--varmap", path("x.cnf.varmap")});
  EXPECT_NE(bad.code, 0);
}

TEST_F(Cli, CompileMachine) {
  const std::string m = write("eq.ghtm", format_ghtm(machines::equality_machine(2)));
  const auto c = run({"--jobs", "2", "compile-tm", "--machine", m, "--n", "2", "--out", path("eq.ghs")});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(run({"verify", "--strategy", path("eq.ghs"), "--table", write("eq.ghf", format_ghf(eq_table(2)))}).code, 0);
  const auto bad = run({"compile-tm", "--machine", write("m.ghtm", format_ghtm(machines::merging_machine())), "--n", "1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("REVERSIBILITY_VIOLATION"), std::string::npos);
}

TEST_F(Cli, Bounds) {
  const auto b = run({"bounds", "--table", write("e.ghf", format_ghf(eq_table(8)))});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.out, bounds_report(eq_table(8)).str());
  EXPECT_EQ(run({"bounds", "--table", write("p.ghf", "ghf 1 1\n0*\n10\n")}).code, 2);
}

TEST_F(Cli, RandomizedCommands) {
  std::vector<Strategy> seeds(4, build_xor(1));
  seeds[0] = Strategy(1, 3, {build_xor(1).alice(0), build_xor(1).alice(1)}, {build_xor(1).bob(1), build_xor(1).bob(0)});
  const std::string r = write("r.ghr", format_ghr(RandomizedStrategy(2, seeds)));
  const std::string t = write("x.ghf", format_ghf(xor_table(1)));
  const auto e = run({"rand-error", "--strategy", r, "--table", t});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out.substr(0, e.out.find('\n')), "worst_case: 1/4");
  const auto m = run({"rand-error", "--strategy", r, "--table", t, "--majority", "3"});
  EXPECT_EQ(m.out.substr(0, m.out.find('\n')), "worst_case: 5/32");
  EXPECT_EQ(run({"rand-error", "--strategy", r, "--table", t, "--majority", "4"}).code, 2);
  const auto d = run({"derandomize", "--strategy", r, "--table", t, "--out", path("fixed.ghs")});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out, "result: ok\nseed: 1\n");
  EXPECT_EQ(parse_ghs(read_file(path("fixed.ghs"))), build_xor(1));
  const auto none = run({"derandomize", "--strategy", r, "--table", write("a.ghf", format_ghf(and_table()))});
  EXPECT_EQ(none.code, 1);
  EXPECT_EQ(none.out, "result: not_found\n");
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--strategy", "x"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
