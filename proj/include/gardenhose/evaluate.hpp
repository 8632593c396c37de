#pragma once

#include <algorithm>
#include <optional>
#include <thread>
#include <vector>

#include "gardenhose/model.hpp"
#include "gardenhose/truth_table.hpp"

namespace gardenhose {

/// Where the water sits between hops: the endpoint it reached after leaving
/// the tap or after crossing a pipe. This is the evaluator's entire state.
struct WaterPosition {
  Endpoint at{Side::alice, kTap};

  friend bool operator==(const WaterPosition&, const WaterPosition&) = default;
};

/// One hop: follow the hose at the current endpoint (if any), then cross the
/// pipe it leads to. `partner(side, endpoint)` returns kNoPartner for an open end.
template <typename PartnerFn>
std::optional<WaterPosition> advance(PartnerFn&& partner, WaterPosition pos) {
  const PipeId next = partner(pos.at.side, pos.at.id);
  if (next == kNoPartner) return std::nullopt;
  return WaterPosition{Endpoint{other(pos.at.side), next}};
}

inline std::optional<WaterPosition> advance(const Strategy& strategy, Input x, Input y, WaterPosition pos) {
  return advance(
      [&](Side side, PipeId e) { return strategy.partner(side, side == Side::alice ? x : y, e); }, pos);
}

struct EvalResult {
  Side exit_side = Side::alice;
  /// Visited endpoints from the tap, alternating hose and pipe edges.
  std::vector<Endpoint> path;
  int hops = 0;

  /// Pipes crossed, in order.
  std::vector<PipeId> pipes() const {
    std::vector<PipeId> out;
    for (std::size_t i = 2; i < path.size(); i += 2) out.push_back(path[i].id);
    return out;
  }
};

inline int exit_bit(Side side) { return side == Side::bob ? 1 : 0; }

/// Follows the maximal path from the tap. The walk is simple, so it stops
/// after at most `pipes` hops.
template <typename PartnerFn>
EvalResult walk(PartnerFn&& partner, int pipes) {
  EvalResult result;
  WaterPosition pos;
  result.path.push_back(pos.at);
  while (auto next = advance(partner, pos)) {
    result.path.push_back(Endpoint{pos.at.side, next->at.id});
    result.path.push_back(next->at);
    pos = *next;
    ++result.hops;
    if (result.hops > pipes) throw Error(ErrorCode::invalid_wiring, "water path longer than the pipe count");
  }
  result.exit_side = pos.at.side;
  return result;
}

inline EvalResult evaluate(const Strategy& strategy, Input x, Input y) {
  if (x >= strategy.inputs() || y >= strategy.inputs()) {
    throw Error(ErrorCode::dimension_mismatch, "input outside {0,1}^n");
  }
  return walk([&](Side side, PipeId e) { return strategy.partner(side, side == Side::alice ? x : y, e); },
              strategy.pipes());
}

/// Exit side only, without recording the path.
inline Side exit_side(const Strategy& strategy, Input x, Input y) {
  WaterPosition pos;
  while (auto next = advance(strategy, x, y, pos)) pos = *next;
  return pos.at.side;
}

struct Counterexample {
  Input x;
  Input y;
  Side got;
  Cell want;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

namespace detail {

inline std::optional<Counterexample> first_mismatch(const Strategy& strategy, const TruthTable& table, Input x_begin,
                                                    Input x_end) {
  for (Input x = x_begin; x < x_end; ++x) {
    for (Input y = 0; y < table.size(); ++y) {
      const Cell want = table.at(x, y);
      if (want == Cell::undefined) continue;
      const Side got = exit_side(strategy, x, y);
      if (exit_bit(got) != (want == Cell::one ? 1 : 0)) return Counterexample{x, y, got, want};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// nullopt when the strategy computes every defined cell; otherwise the
/// lexicographically first (x, then y) failing cell. Rows may be split
/// across `jobs` workers without changing the answer.
inline std::optional<Counterexample> verify(const Strategy& strategy, const TruthTable& table, int jobs = 1) {
  if (strategy.n() != table.n()) {
    throw Error(ErrorCode::dimension_mismatch, "strategy n=" + std::to_string(strategy.n()) +
                                                   " but table n=" + std::to_string(table.n()));
  }
  const Input rows = table.size();
  const auto workers = static_cast<Input>(std::clamp<int>(jobs, 1, static_cast<int>(rows)));
  if (workers == 1) return detail::first_mismatch(strategy, table, 0, rows);

  std::vector<std::optional<Counterexample>> found(workers);
  {
    std::vector<std::jthread> pool;
    const Input chunk = (rows + workers - 1) / workers;
    for (Input w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const Input begin = std::min(rows, w * chunk);
        found[w] = detail::first_mismatch(strategy, table, begin, std::min(rows, begin + chunk));
      });
    }
  }
  for (auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

}  // namespace gardenhose
