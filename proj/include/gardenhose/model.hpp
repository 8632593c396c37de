#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gardenhose/error.hpp"
#include "gardenhose/truth_table.hpp"

namespace gardenhose {

enum class Side : std::uint8_t { alice, bob };

constexpr Side other(Side side) { return side == Side::alice ? Side::bob : Side::alice; }

constexpr const char* to_string(Side side) { return side == Side::alice ? "alice" : "bob"; }

/// Endpoint 0 is Alice's tap; pipes are numbered 1..s on both sides.
using PipeId = int;
constexpr PipeId kTap = 0;
constexpr PipeId kNoPartner = -1;

struct Endpoint {
  Side side;
  PipeId id;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// One hose: an unordered pair of endpoints on the same side.
struct Connection {
  PipeId a;
  PipeId b;

  friend bool operator==(const Connection&, const Connection&) = default;
  friend auto operator<=>(const Connection&, const Connection&) = default;
};

inline Connection normalized(Connection c) { return c.a <= c.b ? c : Connection{c.b, c.a}; }

/// The connections one party makes for one input. Pairs are stored
/// normalized (a <= b) and sorted, so equal wirings compare equal; nothing
/// is checked at construction, see validate_wiring.
class Wiring {
 public:
  Wiring(int pipes, Side side, std::vector<Connection> pairs = {}) : pipes_(pipes), side_(side), pairs_(std::move(pairs)) {
    for (auto& p : pairs_) p = normalized(p);
    std::sort(pairs_.begin(), pairs_.end());
  }

  int pipes() const noexcept { return pipes_; }
  Side side() const noexcept { return side_; }
  std::span<const Connection> pairs() const noexcept { return pairs_; }

  /// Partner of every endpoint 0..s (kNoPartner when open). Requires a valid wiring.
  std::vector<PipeId> partners() const {
    std::vector<PipeId> table(static_cast<std::size_t>(pipes_) + 1, kNoPartner);
    for (const auto& [a, b] : pairs_) {
      table[static_cast<std::size_t>(a)] = b;
      table[static_cast<std::size_t>(b)] = a;
    }
    return table;
  }

  std::optional<PipeId> tap_partner() const {
    if (side_ != Side::alice || pairs_.empty() || pairs_.front().a != kTap) return std::nullopt;
    return pairs_.front().b;
  }

  friend bool operator==(const Wiring&, const Wiring&) = default;

 private:
  int pipes_;
  Side side_;
  std::vector<Connection> pairs_;
};

struct WiringIssue {
  ErrorCode code;
  std::string detail;
};

/// Checks that a wiring is a matching on its side's endpoints. Returns the
/// first problem found, or nullopt when the wiring is legal.
inline std::optional<WiringIssue> validate_wiring(const Wiring& w) {
  if (w.pipes() < 0) return WiringIssue{ErrorCode::endpoint_out_of_range, "negative pipe count"};
  const PipeId low = w.side() == Side::alice ? kTap : 1;
  std::vector<bool> used(static_cast<std::size_t>(w.pipes()) + 1, false);
  for (const auto& [a, b] : w.pairs()) {
    for (PipeId e : {a, b}) {
      if (e == kTap && w.side() == Side::bob) {
        return WiringIssue{ErrorCode::tap_on_bob_side, "endpoint 0 is Alice's tap"};
      }
      if (e < low || e > w.pipes()) {
        return WiringIssue{ErrorCode::endpoint_out_of_range,
                           "endpoint " + std::to_string(e) + " outside [" + std::to_string(low) + ", " +
                               std::to_string(w.pipes()) + "]"};
      }
    }
    if (a == b) return WiringIssue{ErrorCode::self_loop, "endpoint " + std::to_string(a) + " wired to itself"};
    for (PipeId e : {a, b}) {
      if (used[static_cast<std::size_t>(e)]) {
        return WiringIssue{ErrorCode::duplicate_endpoint, "endpoint " + std::to_string(e) + " used twice"};
      }
      used[static_cast<std::size_t>(e)] = true;
    }
  }
  return std::nullopt;
}

/// A deterministic garden-hose game: one Alice wiring per x and one Bob
/// wiring per y over a common set of s pipes. Construction validates every
/// wiring and caches partner tables for evaluation.
class Strategy {
 public:
  Strategy(int n, int pipes, std::vector<Wiring> alice, std::vector<Wiring> bob)
      : n_(n), pipes_(pipes), alice_(std::move(alice)), bob_(std::move(bob)) {
    if (n < 1 || n > kMaxInputBits) throw Error(ErrorCode::invalid_argument, "bad input length");
    if (alice_.size() != input_count(n) || bob_.size() != input_count(n)) {
      throw Error(ErrorCode::dimension_mismatch, "strategy needs 2^n wirings per side");
    }
    check_side(alice_, Side::alice);
    check_side(bob_, Side::bob);
    for (const auto& w : alice_) alice_partners_.push_back(w.partners());
    for (const auto& w : bob_) bob_partners_.push_back(w.partners());
  }

  int n() const noexcept { return n_; }
  int pipes() const noexcept { return pipes_; }
  Input inputs() const noexcept { return static_cast<Input>(input_count(n_)); }

  const Wiring& alice(Input x) const { return alice_.at(x); }
  const Wiring& bob(Input y) const { return bob_.at(y); }

  /// Partner of `endpoint` on `side` for the given private input.
  PipeId partner(Side side, Input input, PipeId endpoint) const {
    const auto& table = side == Side::alice ? alice_partners_[input] : bob_partners_[input];
    return table[static_cast<std::size_t>(endpoint)];
  }

  friend bool operator==(const Strategy& l, const Strategy& r) {
    return l.n_ == r.n_ && l.pipes_ == r.pipes_ && l.alice_ == r.alice_ && l.bob_ == r.bob_;
  }

 private:
  void check_side(const std::vector<Wiring>& wirings, Side side) const {
    for (std::size_t i = 0; i < wirings.size(); ++i) {
      const Wiring& w = wirings[i];
      if (w.side() != side || w.pipes() != pipes_) {
        throw Error(ErrorCode::invalid_wiring, std::string(to_string(side)) + " wiring " + std::to_string(i) +
                                                   " has the wrong side or pipe count");
      }
      if (auto issue = validate_wiring(w)) {
        throw Error(ErrorCode::invalid_wiring, std::string(to_string(side)) + " wiring " + std::to_string(i) + ": " +
                                                   std::string(to_string(issue->code)) + " (" + issue->detail + ")");
      }
    }
  }

  int n_;
  int pipes_;
  std::vector<Wiring> alice_;
  std::vector<Wiring> bob_;
  std::vector<std::vector<PipeId>> alice_partners_;
  std::vector<std::vector<PipeId>> bob_partners_;
};

}  // namespace gardenhose
