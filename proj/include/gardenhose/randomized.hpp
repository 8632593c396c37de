#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "gardenhose/evaluate.hpp"
#include "gardenhose/model.hpp"
#include "gardenhose/truth_table.hpp"

namespace gardenhose {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

constexpr int kDefaultMaxSeedBits = 20;

/// A garden-hose game indexed by a shared uniform seed r in {0,1}^rho: one
/// deterministic strategy per seed, all of the same size.
class RandomizedStrategy {
 public:
  RandomizedStrategy(int seed_bits, std::vector<Strategy> per_seed) : seed_bits_(seed_bits), seeds_(std::move(per_seed)) {
    if (seed_bits < 0 || seed_bits > 30) throw Error(ErrorCode::seed_space_too_large, "seed length must be in [0, 30]");
    if (seeds_.size() != (std::size_t{1} << seed_bits)) {
      throw Error(ErrorCode::dimension_mismatch, "need one strategy per seed (2^rho)");
    }
    for (const auto& s : seeds_) {
      if (s.n() != seeds_.front().n() || s.pipes() != seeds_.front().pipes()) {
        throw Error(ErrorCode::dimension_mismatch, "all seeds must share n and s");
      }
    }
  }

  /// The deterministic strategy used for every seed.
  static RandomizedStrategy lift(const Strategy& s, int seed_bits) {
    return RandomizedStrategy(seed_bits, std::vector<Strategy>(std::size_t{1} << seed_bits, s));
  }

  int n() const { return seeds_.front().n(); }
  int pipes() const { return seeds_.front().pipes(); }
  int seed_bits() const noexcept { return seed_bits_; }
  std::uint64_t seed_count() const noexcept { return seeds_.size(); }
  const Strategy& fixed(std::uint64_t seed) const { return seeds_.at(seed); }

  friend bool operator==(const RandomizedStrategy&, const RandomizedStrategy&) = default;

 private:
  int seed_bits_;
  std::vector<Strategy> seeds_;
};

/// Exact per-cell error probabilities; undefined cells have none.
struct ErrorProfile {
  int n = 1;
  std::vector<std::optional<Rational>> cells;  // row-major, x then y
  Rational worst_case{0};

  const std::optional<Rational>& at(Input x, Input y) const { return cells[static_cast<std::size_t>(x) * input_count(n) + y]; }
};

namespace detail {

inline void require_enumerable(const RandomizedStrategy& rs, const TruthTable& table, int max_seed_bits) {
  if (rs.seed_bits() > max_seed_bits) {
    throw Error(ErrorCode::seed_space_too_large, "2^" + std::to_string(rs.seed_bits()) + " seeds exceed the cap 2^" +
                                                     std::to_string(max_seed_bits));
  }
  if (rs.n() != table.n()) throw Error(ErrorCode::dimension_mismatch, "strategy and table disagree on n");
}

template <typename CellFn>
ErrorProfile build_profile(const TruthTable& table, CellFn&& cell_error) {
  ErrorProfile profile;
  profile.n = table.n();
  profile.cells.resize(input_count(table.n()) * input_count(table.n()));
  for (Input x = 0; x < table.size(); ++x) {
    for (Input y = 0; y < table.size(); ++y) {
      if (!table.defined(x, y)) continue;
      Rational e = cell_error(x, y);
      if (e > profile.worst_case) profile.worst_case = e;
      profile.cells[static_cast<std::size_t>(x) * table.size() + y] = std::move(e);
    }
  }
  return profile;
}

}  // namespace detail

/// Number of seeds on which the strategy gets cell (x, y) wrong.
inline std::uint64_t wrong_seeds(const RandomizedStrategy& rs, const TruthTable& table, Input x, Input y) {
  std::uint64_t wrong = 0;
  const int want = table.at(x, y) == Cell::one ? 1 : 0;
  for (std::uint64_t r = 0; r < rs.seed_count(); ++r) {
    if (exit_bit(exit_side(rs.fixed(r), x, y)) != want) ++wrong;
  }
  return wrong;
}

/// Pr_r[G_r(x, y) != f(x, y)] for every defined cell, by enumerating all seeds.
inline ErrorProfile exact_error(const RandomizedStrategy& rs, const TruthTable& table,
                                int max_seed_bits = kDefaultMaxSeedBits) {
  detail::require_enumerable(rs, table, max_seed_bits);
  return detail::build_profile(table, [&](Input x, Input y) {
    return Rational(BigInt(wrong_seeds(rs, table, x, y)), BigInt(rs.seed_count()));
  });
}

namespace detail {

inline Rational power(const Rational& base, int exp) {
  Rational r{1};
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace detail

/// Probability that the majority of k independent trials is wrong when each
/// is wrong with probability p: sum_{j > k/2} C(k, j) p^j (1 - p)^(k - j).
inline Rational majority_tail(const Rational& p, int k) {
  if (k < 1 || k % 2 == 0) throw Error(ErrorCode::invalid_argument, "majority needs an odd positive k");
  const Rational q = Rational(1) - p;
  Rational total{0};
  BigInt binom = 1;  // C(k, j), built up from j = 0
  for (int j = 0; j <= k; ++j) {
    if (j > 0) binom = binom * (k - j + 1) / j;
    if (2 * j > k) total += Rational(binom) * detail::power(p, j) * detail::power(q, k - j);
  }
  return total;
}

/// Error of the k-fold majority vote over independent seeds, per cell.
inline ErrorProfile majority_error(const RandomizedStrategy& rs, const TruthTable& table, int k,
                                   int max_seed_bits = kDefaultMaxSeedBits) {
  detail::require_enumerable(rs, table, max_seed_bits);
  if (k < 1 || k % 2 == 0) throw Error(ErrorCode::invalid_argument, "majority needs an odd positive k");
  return detail::build_profile(table, [&](Input x, Input y) {
    return majority_tail(Rational(BigInt(wrong_seeds(rs, table, x, y)), BigInt(rs.seed_count())), k);
  });
}

/// e^{-2 delta^2 k}: majority error bound when each trial errs with
/// probability at most 1/2 - delta.
inline double hoeffding_bound(double delta, int k) { return std::exp(-2.0 * delta * delta * k); }

/// e^{-(zeta^2 / 2) p k}: Chernoff bound on Pr[sum of k successes < (1 - zeta) p k]
/// for per-trial success probability p.
inline double chernoff_bound(double success, double zeta, int k) { return std::exp(-(zeta * zeta / 2.0) * success * k); }

/// Smallest seed whose fixed strategy is correct on every defined cell.
inline std::optional<std::uint64_t> derandomize(const RandomizedStrategy& rs, const TruthTable& table,
                                                int max_seed_bits = kDefaultMaxSeedBits) {
  detail::require_enumerable(rs, table, max_seed_bits);
  for (std::uint64_t r = 0; r < rs.seed_count(); ++r) {
    if (!verify(rs.fixed(r), table)) return r;
  }
  return std::nullopt;
}

}  // namespace gardenhose
