#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

using namespace gardenhose;

TEST(Injectivity, NamedTables) {
  EXPECT_EQ(injectivity(eq_table(3)), (Injectivity{true, true}));
  EXPECT_EQ(injectivity(ip_table(3)), (Injectivity{true, true}));
  EXPECT_EQ(injectivity(constant_table(2, false)), (Injectivity{false, false}));
  EXPECT_EQ(injectivity(xor_table(1)), (Injectivity{true, true}));
  EXPECT_EQ(injectivity(xor_table(2)), (Injectivity{false, false}));
}

TEST(Injectivity, OneSidedTable) {
  // f(x, y) = x_1: rows differ, columns are identical.
  const TruthTable t = TruthTable::from_function(1, [](Input x, Input) { return x == 1; });
  EXPECT_EQ(injectivity(t), (Injectivity{true, false}));
  EXPECT_EQ(injectivity_lower_bound(t), 1);  // one pipe suffices: tap to pipe 1 when x = 1
  EXPECT_EQ(injectivity_lower_bound(TruthTable::from_function(5, [](Input x, Input) { return x % 3 == 0; })), 1);
  EXPECT_EQ(min_pipes_for_alice_injective(8), 3);  // 4^4 = 2^8
  EXPECT_EQ(min_pipes_for_alice_injective(9), 4);
}

TEST(Injectivity, AgreesWithSetOracle) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const TruthTable t = oracle::random_table(rng, 1 + static_cast<int>(rng() % 3));
    const auto [rows, cols] = oracle::injective(t);
    EXPECT_EQ(injectivity(t), (Injectivity{rows, cols}));
  }
}

TEST(Injectivity, PartialTableRejected) {
  try {
    injectivity(TruthTable(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::partial_table);
  }
  EXPECT_THROW(injectivity_lower_bound(TruthTable(2)), Error);
}

TEST(InjectivityBound, Examples) {
  EXPECT_EQ(injectivity_lower_bound(eq_table(8)), 4);
  EXPECT_EQ(injectivity_lower_bound(xor_table(1)), 2);
  EXPECT_EQ(injectivity_lower_bound(constant_table(3, true)), 1);
  EXPECT_EQ(injectivity_lower_bound(constant_table(3, false)), 0);
}

TEST(InjectivityBound, MinimalAndMonotone) {
  int last = 0;
  for (int n = 1; n <= 200; ++n) {
    const int s = min_pipes_for_injective(n);
    EXPECT_GE(s * std::log2(s), n - 1e-9) << n;
    EXPECT_LT((s - 1) * std::log2(s - 1), n) << n;
    EXPECT_GE(s, last);
    last = s;
  }
}

TEST(CountingBound, Examples) {
  EXPECT_EQ(counting_existence_bound(1), 1);
  EXPECT_EQ(counting_existence_bound(3), 2);
  EXPECT_EQ(counting_existence_bound(5), 6);
  EXPECT_EQ(counting_existence_bound(4), 3);  // 4 log 4 = 8 exactly
  EXPECT_THROW(counting_existence_bound(0), Error);
}

TEST(CountingBound, MinimalAndMonotone) {
  int last = 0;
  for (int n = 1; n <= 20; ++n) {
    const int s = counting_existence_bound(n);
    const double target = std::ldexp(1.0, n - 1);
    EXPECT_GE((s + 1) * std::log2(s + 1), target - 1e-6) << n;
    EXPECT_LT(s * std::log2(s), target) << n;
    EXPECT_GE(s, last);
    last = s;
  }
}

TEST(BoundsReport, KeyValueText) {
  const auto r = bounds_report(eq_table(8));
  EXPECT_EQ(r.str(),
            "injective_for_alice: true\ninjective_for_bob: true\ninjectivity_bound: 4\ncounting_bound: " +
                std::to_string(counting_existence_bound(8)) + "\n");
}

TEST(Bounds, ConsistentWithExhaustiveSearch) {
  std::mt19937_64 rng(73);
  for (unsigned code = 0; code < 16; ++code) {
    const TruthTable t = oracle::table_n1(code);
    EXPECT_GE(brute_force_gh(t, 7).s_min, injectivity_lower_bound(t));
  }
  for (int trial = 0; trial < 6; ++trial) {
    const TruthTable t = oracle::random_table(rng, 2);
    const auto r = brute_force_gh(t, 5);
    if (r.exact) {
      EXPECT_GE(r.s_min, injectivity_lower_bound(t));
    }
  }
}
