#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "gardenhose/truth_table.hpp"

namespace gardenhose {

/// Injectivity for Alice: all rows pairwise distinct. For Bob: all columns.
struct Injectivity {
  bool alice = false;
  bool bob = false;

  friend bool operator==(const Injectivity&, const Injectivity&) = default;
};

inline Injectivity injectivity(const TruthTable& table) {
  table.require_total();
  const Input size = table.size();
  // Rows and columns packed into bytes, so sorting compares with memcmp.
  std::vector<std::string> rows(size, std::string((size + 7) / 8, '\0'));
  std::vector<std::string> cols = rows;
  for (Input x = 0; x < size; ++x) {
    for (Input y = 0; y < size; ++y) {
      if (table.at(x, y) != Cell::one) continue;
      rows[x][y / 8] = static_cast<char>(rows[x][y / 8] | (1 << (y % 8)));
      cols[y][x / 8] = static_cast<char>(cols[y][x / 8] | (1 << (x % 8)));
    }
  }
  const auto all_distinct = [](std::vector<std::string>& lines) {
    std::sort(lines.begin(), lines.end());
    return std::adjacent_find(lines.begin(), lines.end()) == lines.end();
  };
  return {all_distinct(rows), all_distinct(cols)};
}

namespace detail {

/// base^exp >= 2^bits, exactly.
inline bool power_reaches(std::uint64_t base, std::uint64_t exp, std::uint64_t bits) {
  if (base == 0) return bits == 0 && exp == 0;
  if (base == 1) return bits == 0;
  boost::multiprecision::cpp_int value = boost::multiprecision::pow(boost::multiprecision::cpp_int(base), static_cast<unsigned>(exp));
  return value != 0 && boost::multiprecision::msb(value) >= bits;
}

}  // namespace detail

/// Least s with s log2 s >= n, i.e. s^s >= 2^n.
inline int min_pipes_for_injective(int n) {
  int s = 1;
  while (!detail::power_reaches(static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(n))) ++s;
  return s;
}

/// Least s with (s + 1)^(s + 1) >= 2^n: Alice also wires the tap, so she
/// has up to s + 1 endpoints to match.
inline int min_pipes_for_alice_injective(int n) {
  int s = 0;
  while (!detail::power_reaches(static_cast<std::uint64_t>(s) + 1, static_cast<std::uint64_t>(s) + 1, static_cast<std::uint64_t>(n))) ++s;
  return s;
}

/// Pigeonhole bound from distinct rows or columns. Otherwise 1, or 0 when no
/// defined cell is 1 (the empty game already computes it).
inline int injectivity_lower_bound(const TruthTable& table) {
  const auto inj = injectivity(table);
  int bound = 0;
  for (Input x = 0; x < table.size() && bound == 0; ++x) {
    for (Input y = 0; y < table.size(); ++y) {
      if (table.at(x, y) == Cell::one) {
        bound = 1;
        break;
      }
    }
  }
  if (inj.bob) bound = std::max(bound, min_pipes_for_injective(table.n()));
  if (inj.alice) bound = std::max(bound, min_pipes_for_alice_injective(table.n()));
  return bound;
}

/// Least s with (s + 1) log2(s + 1) >= 2^(n-1): below this size there are
/// fewer games than functions on n bits, so some function needs more pipes.
inline int counting_existence_bound(int n) {
  if (n < 1 || n > 20) throw Error(ErrorCode::invalid_argument, "counting bound supports 1 <= n <= 20");
  const std::uint64_t target = std::uint64_t{1} << (n - 1);
  const auto ok = [&](std::uint64_t s) { return detail::power_reaches(s + 1, s + 1, target); };
  std::uint64_t hi = 1;
  while (!ok(hi)) hi *= 2;
  std::uint64_t lo = 0;  // ok(lo) is false for n >= 1
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (ok(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return static_cast<int>(hi);
}

struct BoundsReport {
  Injectivity injective;
  int injectivity_bound = 1;
  int counting_bound = 0;

  /// Flat `key: value` lines.
  std::string str() const {
    std::string s;
    s += "injective_for_alice: " + std::string(injective.alice ? "true" : "false") + "\n";
    s += "injective_for_bob: " + std::string(injective.bob ? "true" : "false") + "\n";
    s += "injectivity_bound: " + std::to_string(injectivity_bound) + "\n";
    s += "counting_bound: " + std::to_string(counting_bound) + "\n";
    return s;
  }
};

inline BoundsReport bounds_report(const TruthTable& table) {
  BoundsReport r;
  r.injective = injectivity(table);
  r.injectivity_bound = injectivity_lower_bound(table);
  r.counting_bound = counting_existence_bound(table.n());
  return r;
}

}  // namespace gardenhose
