#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

using namespace gardenhose;

namespace {

/// Bob's wirings for y = 0 and y = 1 exchanged: wrong on every cell of XOR_1.
Strategy broken_xor() {
  const Strategy good = build_xor(1);
  return Strategy(1, 3, {good.alice(0), good.alice(1)}, {good.bob(1), good.bob(0)});
}

RandomizedStrategy xor_with_bad_seeds(int seed_bits, const std::vector<std::uint64_t>& bad) {
  std::vector<Strategy> seeds(std::size_t{1} << seed_bits, build_xor(1));
  for (auto r : bad) seeds[r] = broken_xor();
  return RandomizedStrategy(seed_bits, seeds);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

TEST(ExactError, DeterministicLift) {
  const auto p = exact_error(RandomizedStrategy::lift(build_xor(1), 2), xor_table(1));
  EXPECT_EQ(p.worst_case, Rational(0));
  const auto q = exact_error(RandomizedStrategy::lift(build_xor(1), 2), and_table());
  EXPECT_EQ(q.worst_case, Rational(1));
  EXPECT_EQ(*q.at(0, 1), Rational(1));
  EXPECT_EQ(*q.at(0, 0), Rational(0));
}

TEST(ExactError, LiftedCellsAreZeroOrOne) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = exact_error(RandomizedStrategy::lift(oracle::random_strategy(rng, 2, 4), 3), oracle::random_table(rng, 2));
    for (const auto& c : p.cells) {
      ASSERT_TRUE(c.has_value());
      EXPECT_TRUE(*c == 0 || *c == 1);
    }
  }
}

TEST(ExactError, OneBadSeedInFour) {
  const auto p = exact_error(xor_with_bad_seeds(2, {3}), xor_table(1));
  EXPECT_EQ(p.worst_case, Rational(1, 4));
  for (const auto& c : p.cells) EXPECT_EQ(*c, Rational(1, 4));
}

TEST(ExactError, HandEnumeratedMixedInstance) {
  // Seed 1 fails everywhere; seed 2 fails only where Bob's y = 1 (it always pours to pipe 1).
  const Strategy good = build_xor(1);
  const Strategy half(1, 3, {good.alice(0), good.alice(1)}, {good.bob(0), good.bob(0)});
  const RandomizedStrategy rs(2, {good, broken_xor(), half, good});
  const auto p = exact_error(rs, xor_table(1));
  EXPECT_EQ(*p.at(0, 0), Rational(1, 4));
  EXPECT_EQ(*p.at(0, 1), Rational(1, 2));
  EXPECT_EQ(*p.at(1, 0), Rational(1, 4));
  EXPECT_EQ(*p.at(1, 1), Rational(1, 2));
  EXPECT_EQ(p.worst_case, Rational(1, 2));
}

TEST(ExactError, UndefinedCellsAreSkipped) {
  const auto p = exact_error(xor_with_bad_seeds(2, {0, 1, 2, 3}), TruthTable(1));
  EXPECT_EQ(p.worst_case, Rational(0));
  for (const auto& c : p.cells) EXPECT_FALSE(c.has_value());
}

TEST(ExactError, SeedSpaceLimit) {
  try {
    exact_error(xor_with_bad_seeds(3, {}), xor_table(1), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::seed_space_too_large);
  }
  EXPECT_THROW(derandomize(xor_with_bad_seeds(3, {}), xor_table(1), 2), Error);
}

TEST(Majority, BinomialTail) {
  EXPECT_EQ(majority_tail(Rational(1, 4), 3), Rational(5, 32));
  EXPECT_LT(majority_tail(Rational(1, 4), 3), Rational(1, 4));
  EXPECT_EQ(majority_tail(Rational(0), 9), Rational(0));
  EXPECT_EQ(majority_tail(Rational(1), 9), Rational(1));
  EXPECT_EQ(majority_tail(Rational(1, 2), 5), Rational(1, 2));
  EXPECT_EQ(majority_tail(Rational(1, 3), 1), Rational(1, 3));
  EXPECT_THROW(majority_tail(Rational(1, 3), 4), Error);
}

TEST(Majority, OneTrialIsExactError) {
  const RandomizedStrategy rs = xor_with_bad_seeds(3, {1, 6});
  EXPECT_EQ(majority_error(rs, xor_table(1), 1).cells, exact_error(rs, xor_table(1)).cells);
  EXPECT_EQ(majority_error(xor_with_bad_seeds(2, {3}), xor_table(1), 3).worst_case, Rational(5, 32));
}

TEST(Majority, HoeffdingAndChernoffBounds) {
  for (int bits = 1; bits <= 4; ++bits) {
    const std::uint64_t seeds = std::uint64_t{1} << bits;
    for (std::uint64_t bad = 0; 2 * bad < seeds; ++bad) {
      std::vector<std::uint64_t> which;
      for (std::uint64_t r = 0; r < bad; ++r) which.push_back(r);
      const RandomizedStrategy rs = xor_with_bad_seeds(bits, which);
      const double p = static_cast<double>(bad) / static_cast<double>(seeds);
      const double delta = 0.5 - p;
      const double success = 1.0 - p;
      const double zeta = 1.0 - 1.0 / (2.0 * success);  // (1 - zeta) p k = k / 2
      for (int k = 1; k <= 41; k += 2) {
        const double err = to_double(majority_error(rs, xor_table(1), k).worst_case);
        EXPECT_LE(err, hoeffding_bound(delta, k) + 1e-12) << bits << " " << bad << " " << k;
        EXPECT_LE(err, chernoff_bound(success, zeta, k) + 1e-12);
      }
    }
  }
}

TEST(Majority, DecreasesWithRepetitions) {
  Rational last{1};
  for (int k = 1; k <= 21; k += 2) {
    const Rational e = majority_tail(Rational(1, 3), k);
    EXPECT_LT(e, last);
    last = e;
  }
}

TEST(Derandomize, SmallestPerfectSeed) {
  EXPECT_EQ(derandomize(xor_with_bad_seeds(2, {0}), xor_table(1)), std::optional<std::uint64_t>(1));
  EXPECT_EQ(derandomize(xor_with_bad_seeds(2, {2}), xor_table(1)), std::optional<std::uint64_t>(0));
}

TEST(Derandomize, NotFoundWhenEverySeedFails) {
  EXPECT_EQ(derandomize(xor_with_bad_seeds(2, {0, 1, 2, 3}), xor_table(1)), std::nullopt);
}

TEST(Derandomize, UnionBoundGuaranteesASeed) {
  std::mt19937_64 rng(61);
  int guaranteed = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int bits = 4 + static_cast<int>(rng() % 3);
    std::vector<Strategy> seeds(std::size_t{1} << bits, build_xor(1));
    const auto noisy = rng() % 4;
    for (std::uint64_t i = 0; i < noisy; ++i) seeds[rng() % seeds.size()] = oracle::random_strategy(rng, 1, 3);
    const RandomizedStrategy rs(bits, seeds);
    const auto profile = exact_error(rs, xor_table(1));
    const auto seed = derandomize(rs, xor_table(1));
    if (seed) {
      EXPECT_FALSE(verify(rs.fixed(*seed), xor_table(1)).has_value());
    }
    if (profile.worst_case < Rational(1, 8)) {
      ++guaranteed;
      EXPECT_TRUE(seed.has_value());
    }
  }
  EXPECT_GT(guaranteed, 10);
}
