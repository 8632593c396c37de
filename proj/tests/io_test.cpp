#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace gardenhose;

namespace {

/// Line and column of the parse error raised by `fn`.
std::pair<std::size_t, std::size_t> error_position(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line " + std::to_string(e.line())), std::string::npos);
    return {e.line(), e.column()};
  }
  ADD_FAILURE() << "no parse error";
  return {0, 0};
}

using Pos = std::pair<std::size_t, std::size_t>;

}  // namespace

TEST(Ghf, RoundTripWithUndefinedCells) {
  TruthTable t = eq_table(2);
  t.set(1, 2, Cell::undefined);
  const std::string text = format_ghf(t);
  EXPECT_EQ(text, "ghf 1 2\n1000\n01*0\n0010\n0001\n");
  EXPECT_EQ(parse_ghf(text), t);
}

TEST(Ghf, Errors) {
  EXPECT_EQ(error_position([] { parse_ghf("ghf 1 1\n0a\n10\n"); }), Pos(2, 2));
  EXPECT_EQ(error_position([] { parse_ghf("ghf 2 1\n01\n10\n"); }), Pos(1, 5));
  EXPECT_EQ(error_position([] { parse_ghf("gh 1 1\n01\n10\n"); }), Pos(1, 1));
  EXPECT_EQ(error_position([] { parse_ghf("ghf 1 1\n011\n10\n"); }), Pos(2, 1));
  EXPECT_EQ(error_position([] { parse_ghf("ghf 1 1\n01\n"); }), Pos(3, 1));
  EXPECT_EQ(error_position([] { parse_ghf("ghf 1 1\n01\n10\n11\n"); }), Pos(4, 1));
  EXPECT_EQ(error_position([] { parse_ghf("ghf 1 0\n"); }), Pos(1, 7));
}

TEST(Ghs, ExactTextForXor) {
  EXPECT_EQ(format_ghs(build_xor(1)), "ghs 1 1 3\nalice\n1\n2\nbob\n1-3\n2-3\n");
}

TEST(Ghs, RoundTripFamilies) {
  for (const Strategy& s : {build_xor(3), build_eq(4), build_ip(3), build_maj(3), build_generic(and_table()),
                            Strategy(1, 0, {Wiring(0, Side::alice), Wiring(0, Side::alice)}, {Wiring(0, Side::bob), Wiring(0, Side::bob)})}) {
    const std::string text = format_ghs(s);
    EXPECT_EQ(parse_ghs(text), s);
    EXPECT_EQ(format_ghs(parse_ghs(text)), text);
  }
}

TEST(Ghs, RoundTripRandom) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 50; ++trial) {
    const Strategy s = oracle::random_strategy(rng, 1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 9));
    EXPECT_EQ(parse_ghs(format_ghs(s)), s);
  }
}

TEST(Ghs, Errors) {
  EXPECT_EQ(error_position([] { parse_ghs("ghs 1 1 3\nalice\n1 1-2\n2\nbob\n\n\n"); }), Pos(3, 1));   // duplicate endpoint
  EXPECT_EQ(error_position([] { parse_ghs("ghs 1 1 3\nalice\n1\n4\nbob\n\n\n"); }), Pos(4, 1));      // out of range
  EXPECT_EQ(error_position([] { parse_ghs("ghs 1 1 3\nalice\n1\n2 3-x\nbob\n\n\n"); }), Pos(4, 5));  // bad pair end
  EXPECT_EQ(error_position([] { parse_ghs("ghs 1 1 3\nalice\n1\n2\nbob\n1-3 3\n\n"); }), Pos(6, 5));
  EXPECT_EQ(error_position([] { parse_ghs("ghs 1 1 3\nalice\n1\n2\nbib\n\n\n"); }), Pos(5, 1));
  EXPECT_EQ(error_position([] { parse_ghs("ghs 1 1 3\nalice\n1\n2\nbob\n2-2\n\n"); }), Pos(6, 1));    // self loop
  EXPECT_EQ(error_position([] { parse_ghs("ghs 1 1\nalice\n"); }), Pos(1, 7));
}

TEST(Ghs, TrailingBlankBobLinesMayBeOmitted) {
  // Empty Bob wirings at the end of the file are blank lines; a missing final newline is fine.
  const Strategy s = parse_ghs("ghs 1 1 2\nalice\n1\n-\nbob\n1-2\n");
  EXPECT_TRUE(s.bob(1).pairs().empty());
}

TEST(Ghr, RoundTrip) {
  std::mt19937_64 rng(83);
  std::vector<Strategy> seeds;
  for (int r = 0; r < 4; ++r) seeds.push_back(oracle::random_strategy(rng, 1, 3));
  const RandomizedStrategy rs(2, seeds);
  const std::string text = format_ghr(rs);
  const RandomizedStrategy back = parse_ghr(text);
  EXPECT_EQ(back.seed_bits(), 2);
  for (std::uint64_t r = 0; r < 4; ++r) EXPECT_EQ(back.fixed(r), rs.fixed(r));
  EXPECT_EQ(format_ghr(back), text);
  EXPECT_EQ(error_position([] { parse_ghr("ghr 1 1 3 1\nalice\n1\n2\nbob\n1-3\n2-3\n"); }), Pos(8, 1));
}

TEST(Ghtm, RoundTripSampleMachines) {
  for (const TuringMachine& m : {machines::parity_machine(2), machines::equality_machine(3), machines::merging_machine()}) {
    const std::string text = format_ghtm(m);
    EXPECT_EQ(parse_ghtm(text), m);
    EXPECT_EQ(format_ghtm(parse_ghtm(text)), text);
  }
}

TEST(Ghtm, Errors) {
  const std::string head = "ghtm 1 3 1\nstart 0\naccept 1\nreject 2\n";
  EXPECT_EQ(error_position([&] { parse_ghtm(head + "0 0 _ -> 1 _ R Q\n"); }), Pos(5, 16));
  EXPECT_EQ(error_position([&] { parse_ghtm(head + "0 0 x -> 1 _ R S\n"); }), Pos(5, 5));
  EXPECT_EQ(error_position([&] { parse_ghtm(head + "0 0 _ => 1 _ R S\n"); }), Pos(5, 7));
  EXPECT_EQ(error_position([&] { parse_ghtm(head + "0 0 _ -> 3 _ R S\n"); }), Pos(5, 10));
  EXPECT_EQ(error_position([&] { parse_ghtm(head + "0 0 _ -> 1 _ R S\n0 0 _ -> 2 _ R S\n"); }), Pos(6, 1));
  EXPECT_EQ(error_position([] { parse_ghtm("ghtm 1 3 1\nbegin 0\n"); }), Pos(2, 1));
}

TEST(Ghp, RoundTripAndText) {
  ProtocolTree t(1, 2);
  t.set_message(Transcript::parse("-"), {false, true});
  t.set_message(Transcript::parse("0"), {false, true});
  t.set_message(Transcript::parse("1"), {false, true});
  t.set_leaf(Transcript::parse("00"), {false, false});
  t.set_leaf(Transcript::parse("01"), {true, true});
  t.set_leaf(Transcript::parse("10"), {true, true});
  t.set_leaf(Transcript::parse("11"), {false, false});
  const std::string text = format_ghp(t);
  EXPECT_EQ(text, "ghp 1 1 2\n- 01\n0 01\n1 01\nleaf 00 00\nleaf 01 11\nleaf 10 11\nleaf 11 00\n");
  EXPECT_EQ(parse_ghp(text), t);
}

TEST(Ghp, Errors) {
  EXPECT_EQ(error_position([] { parse_ghp("ghp 1 1 1\n- 01\n- 01\n"); }), Pos(3, 1));
  EXPECT_EQ(error_position([] { parse_ghp("ghp 1 1 1\n- 012\n"); }), Pos(2, 3));
  EXPECT_EQ(error_position([] { parse_ghp("ghp 1 1 1\n- 0x\n"); }), Pos(2, 4));
  EXPECT_EQ(error_position([] { parse_ghp("ghp 1 1 1\n2 01\n"); }), Pos(2, 1));
  EXPECT_EQ(error_position([] { parse_ghp("ghp 1 1 1\nleaf 0\n"); }), Pos(2, 6));
}

TEST(Dimacs, RoundTrip) {
  const CNFInstance cnf = encode_sat(xor_table(1), 2);
  const CNFInstance back = parse_dimacs(format_dimacs(cnf));
  EXPECT_EQ(back.variables, cnf.variables);
  EXPECT_EQ(back.clauses, cnf.clauses);
  EXPECT_EQ(back.varmap, cnf.varmap);
  EXPECT_EQ(parse_varmap(format_varmap(cnf.varmap)), cnf.varmap);
}

TEST(Dimacs, CommentsMirrorTheSidecar) {
  const CNFInstance cnf = encode_sat(and_table(), 2);
  const std::string dimacs = format_dimacs(cnf);
  const std::string sidecar = format_varmap(cnf.varmap);
  std::istringstream in(sidecar);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(dimacs.rfind(line + "\n", 0), 0U);
  while (std::getline(in, line)) EXPECT_NE(dimacs.find("c var " + line + "\n"), std::string::npos) << line;
}

TEST(Dimacs, Errors) {
  EXPECT_EQ(error_position([] { parse_dimacs("p cnf 2 1\n1 3 0\n"); }), Pos(2, 3));
  EXPECT_EQ(error_position([] { parse_dimacs("1 2 0\n"); }), Pos(1, 1));
  EXPECT_EQ(error_position([] { parse_dimacs("p cnf 2 2\n1 2 0\n"); }).first, 2U);
  EXPECT_EQ(error_position([] { parse_varmap("c ghcnf 1 1 2\n1 alice 0 0\n"); }), Pos(2, 3));
  EXPECT_EQ(error_position([] { parse_varmap("c ghcnf 1 1 2\n1 carol 0 0 1\n"); }), Pos(2, 3));
  EXPECT_EQ(error_position([] { parse_varmap("c ghcnf 1 1 2\n2 alice 0 0 1\n"); }), Pos(2, 1));
}

TEST(Model, SolverOutputFormats) {
  EXPECT_EQ(parse_model("s SATISFIABLE\nv 1 -2 3\nv -4 0\n"), (std::vector<Literal>{1, -2, 3, -4}));
  EXPECT_EQ(parse_model("c comment\n1 -2\n3 0\n"), (std::vector<Literal>{1, -2, 3}));
  EXPECT_EQ(parse_model("SAT\n1 -2 0\n"), (std::vector<Literal>{1, -2}));
  EXPECT_EQ(error_position([] { parse_model("s UNSATISFIABLE\n"); }), Pos(1, 3));
  EXPECT_EQ(error_position([] { parse_model("v 1 x\n"); }), Pos(1, 5));
}
