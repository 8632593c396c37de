#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gardenhose/error.hpp"

namespace gardenhose {

/// A party's private input, read as a big-endian integer (x1 is the most
/// significant bit).
using Input = std::uint32_t;

constexpr int kMaxInputBits = 13;

enum class Cell : std::uint8_t { zero, one, undefined };

inline std::size_t input_count(int n) { return std::size_t{1} << n; }

/// Bit i (1-based, i = 1 is the most significant) of an n-bit input.
constexpr int input_bit(Input value, int i, int n) { return static_cast<int>((value >> (n - i)) & 1U); }

inline int popcount(Input value) { return std::popcount(value); }

inline std::string to_bits(Input value, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 1; i <= n; ++i) {
    if (input_bit(value, i, n) != 0) out[static_cast<std::size_t>(i - 1)] = '1';
  }
  return out;
}

inline Input parse_bits(std::string_view bits, int n) {
  if (static_cast<int>(bits.size()) != n) {
    throw Error(ErrorCode::dimension_mismatch,
                "expected " + std::to_string(n) + " bits, got '" + std::string(bits) + "'");
  }
  Input value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error(ErrorCode::invalid_argument, "not a bit string: '" + std::string(bits) + "'");
    value = (value << 1) | static_cast<Input>(c - '0');
  }
  return value;
}

/// f : {0,1}^n x {0,1}^n -> {0, 1, undefined}; row = x, column = y.
class TruthTable {
 public:
  explicit TruthTable(int n, Cell fill = Cell::undefined) : n_(n) {
    if (n < 1 || n > kMaxInputBits) {
      throw Error(ErrorCode::invalid_argument, "input length must be in [1, " + std::to_string(kMaxInputBits) + "]");
    }
    cells_.assign(input_count(n) * input_count(n), fill);
  }

  template <typename F>
  static TruthTable from_function(int n, F&& f) {
    TruthTable table(n);
    for (Input x = 0; x < table.size(); ++x) {
      for (Input y = 0; y < table.size(); ++y) table.set(x, y, f(x, y) ? Cell::one : Cell::zero);
    }
    return table;
  }

  int n() const noexcept { return n_; }
  /// Number of inputs per party, 2^n.
  Input size() const noexcept { return static_cast<Input>(input_count(n_)); }

  Cell at(Input x, Input y) const { return cells_[index(x, y)]; }
  void set(Input x, Input y, Cell value) { cells_[index(x, y)] = value; }

  bool defined(Input x, Input y) const { return at(x, y) != Cell::undefined; }

  bool total() const {
    for (Cell c : cells_) {
      if (c == Cell::undefined) return false;
    }
    return true;
  }

  void require_total() const {
    if (!total()) throw Error(ErrorCode::partial_table, "table has undefined cells");
  }

  TruthTable complemented() const {
    TruthTable out = *this;
    for (Cell& c : out.cells_) {
      if (c == Cell::zero) {
        c = Cell::one;
      } else if (c == Cell::one) {
        c = Cell::zero;
      }
    }
    return out;
  }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  std::size_t index(Input x, Input y) const { return static_cast<std::size_t>(x) * size() + y; }

  int n_;
  std::vector<Cell> cells_;
};

inline bool cell_value(Cell c) { return c == Cell::one; }

// Named functions used throughout the library and its tests.

inline TruthTable constant_table(int n, bool value) {
  return TruthTable(n, value ? Cell::one : Cell::zero);
}

/// Parity of all 2n input bits.
inline TruthTable xor_table(int n) {
  return TruthTable::from_function(n, [](Input x, Input y) { return (popcount(x ^ y) & 1) != 0; });
}

inline TruthTable and_table() {
  return TruthTable::from_function(1, [](Input x, Input y) { return (x & y) != 0; });
}

inline TruthTable eq_table(int n) {
  return TruthTable::from_function(n, [](Input x, Input y) { return x == y; });
}

/// Bitwise inner product mod 2.
inline TruthTable ip_table(int n) {
  return TruthTable::from_function(n, [](Input x, Input y) { return (popcount(x & y) & 1) != 0; });
}

/// MAJ(x, y) = 1 iff sum_i x_i y_i >= ceil(n / 2).
inline TruthTable maj_table(int n) {
  const int threshold = (n + 1) / 2;
  return TruthTable::from_function(n, [threshold](Input x, Input y) { return popcount(x & y) >= threshold; });
}

}  // namespace gardenhose
