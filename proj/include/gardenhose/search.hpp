#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

#include "gardenhose/evaluate.hpp"
#include "gardenhose/model.hpp"
#include "gardenhose/truth_table.hpp"

namespace gardenhose {

/// Every matching on endpoints {first..last}, in a fixed order: the lowest
/// free endpoint is either left open or joined to each higher free endpoint in turn.
inline std::vector<std::vector<Connection>> enumerate_matchings(PipeId first, PipeId last) {
  std::vector<std::vector<Connection>> out;
  std::vector<bool> used(static_cast<std::size_t>(std::max(last, 0)) + 1, false);
  std::vector<Connection> current;
  const auto rec = [&](auto&& self, PipeId from) -> void {
    while (from <= last && used[static_cast<std::size_t>(from)]) ++from;
    if (from > last) {
      out.push_back(current);
      return;
    }
    used[static_cast<std::size_t>(from)] = true;
    self(self, from + 1);
    for (PipeId to = from + 1; to <= last; ++to) {
      if (used[static_cast<std::size_t>(to)]) continue;
      used[static_cast<std::size_t>(to)] = true;
      current.push_back({from, to});
      self(self, from + 1);
      current.pop_back();
      used[static_cast<std::size_t>(to)] = false;
    }
    used[static_cast<std::size_t>(from)] = false;
  };
  rec(rec, first);
  return out;
}

struct SearchLimits {
  int max_n = 2;
  int max_pipes = 7;
  int jobs = 1;
};

struct SearchReport {
  /// True when `s_min` is exact; otherwise no strategy with at most s_max
  /// pipes exists and [lower_bound, upper_bound] brackets the complexity.
  bool exact = false;
  int s_min = -1;
  int lower_bound = 0;
  int upper_bound = 0;
  std::optional<Strategy> witness;
  /// Bob wiring tuples examined, summed over all sizes tried.
  std::uint64_t nodes = 0;
  /// Tuples skipped because their first wiring is not in canonical form.
  std::uint64_t pruned = 0;
};

namespace detail {

struct SizeSearch {
  std::optional<Strategy> witness;
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
};

/// Is there a strategy with exactly `pipes` pipes? Bob's wirings are fixed
/// per distinct column; given them, each row independently needs some Alice
/// wiring producing the wanted outputs. Relabeling pipes never changes an exit
/// side, so the first column's wiring is taken in canonical form
/// {1-2, 3-4, ...}.
inline SizeSearch search_size(const TruthTable& table, int pipes, int jobs) {
  const auto alice = enumerate_matchings(kTap, pipes);
  const auto bob = enumerate_matchings(1, pipes);

  // Distinct columns, each with its defined-cell mask per row.
  std::vector<Input> columns;
  std::vector<std::size_t> column_of(table.size());
  for (Input y = 0; y < table.size(); ++y) {
    std::size_t found = columns.size();
    for (std::size_t j = 0; j < columns.size(); ++j) {
      bool same = true;
      for (Input x = 0; x < table.size() && same; ++x) same = table.at(x, y) == table.at(x, columns[j]);
      if (same) {
        found = j;
        break;
      }
    }
    if (found == columns.size()) columns.push_back(y);
    column_of[y] = found;
  }
  const std::size_t k = columns.size();
  std::vector<std::uint32_t> want(table.size(), 0);
  std::vector<std::uint32_t> care(table.size(), 0);
  for (Input x = 0; x < table.size(); ++x) {
    for (std::size_t j = 0; j < k; ++j) {
      const Cell c = table.at(x, columns[j]);
      if (c == Cell::undefined) continue;
      care[x] |= 1U << j;
      if (c == Cell::one) want[x] |= 1U << j;
    }
  }

  // exits[a * |bob| + b]: does the water end on Bob's side?
  std::vector<std::vector<PipeId>> alice_partner;
  std::vector<std::vector<PipeId>> bob_partner;
  for (const auto& m : alice) alice_partner.push_back(Wiring(pipes, Side::alice, m).partners());
  for (const auto& m : bob) bob_partner.push_back(Wiring(pipes, Side::bob, m).partners());
  std::vector<std::uint8_t> exits(alice.size() * bob.size());
  for (std::size_t a = 0; a < alice.size(); ++a) {
    for (std::size_t b = 0; b < bob.size(); ++b) {
      WaterPosition pos;
      const auto lookup = [&](Side side, PipeId e) {
        return (side == Side::alice ? alice_partner[a] : bob_partner[b])[static_cast<std::size_t>(e)];
      };
      while (auto next = advance(lookup, pos)) pos = *next;
      exits[a * bob.size() + b] = pos.at.side == Side::bob ? 1 : 0;
    }
  }

  std::vector<std::size_t> canonical;
  for (std::size_t b = 0; b < bob.size(); ++b) {
    bool is_canonical = true;
    for (std::size_t i = 0; i < bob[b].size(); ++i) {
      is_canonical = is_canonical && bob[b][i] == Connection{static_cast<PipeId>(2 * i + 1), static_cast<PipeId>(2 * i + 2)};
    }
    if (is_canonical) canonical.push_back(b);
  }

  std::uint64_t rest = 1;
  for (std::size_t j = 1; j < k; ++j) rest *= bob.size();
  const std::uint64_t total = rest * bob.size();
  const std::uint64_t explored_space = rest * canonical.size();

  // Decodes tuple index t (first coordinate most significant) into Bob wiring ids.
  const auto decode = [&](std::uint64_t t, std::vector<std::size_t>& tuple) {
    for (std::size_t j = k; j-- > 1;) {
      tuple[j] = static_cast<std::size_t>(t % bob.size());
      t /= bob.size();
    }
    tuple[0] = canonical[static_cast<std::size_t>(t)];
  };
  const auto check = [&](const std::vector<std::size_t>& tuple, std::vector<std::uint32_t>& response,
                         std::vector<std::size_t>* chosen) {
    for (std::size_t a = 0; a < alice.size(); ++a) {
      std::uint32_t mask = 0;
      for (std::size_t j = 0; j < k; ++j) mask |= static_cast<std::uint32_t>(exits[a * bob.size() + tuple[j]]) << j;
      response[a] = mask;
    }
    for (Input x = 0; x < table.size(); ++x) {
      bool ok = false;
      for (std::size_t a = 0; a < alice.size() && !ok; ++a) {
        if (((response[a] ^ want[x]) & care[x]) == 0) {
          ok = true;
          if (chosen != nullptr) (*chosen)[x] = a;
        }
      }
      if (!ok) return false;
    }
    return true;
  };

  const std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  const auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::size_t> tuple(k);
    std::vector<std::uint32_t> response(alice.size());
    for (std::uint64_t t = begin; t < end; ++t) {
      decode(t, tuple);
      if (check(tuple, response, nullptr)) return t;
    }
    return none;
  };

  std::uint64_t hit = none;
  const auto workers = static_cast<std::uint64_t>(std::max(1, jobs));
  if (workers == 1 || explored_space < 1024) {
    hit = scan(0, explored_space);
  } else {
    std::vector<std::uint64_t> found(workers, none);
    {
      std::vector<std::jthread> pool;
      const std::uint64_t chunk = (explored_space + workers - 1) / workers;
      for (std::uint64_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          const std::uint64_t begin = std::min(explored_space, w * chunk);
          found[w] = scan(begin, std::min(explored_space, begin + chunk));
        });
      }
    }
    hit = *std::min_element(found.begin(), found.end());
  }

  SizeSearch result;
  result.pruned = total - explored_space;
  if (hit == none) {
    result.nodes = explored_space;
    return result;
  }
  result.nodes = hit + 1;
  std::vector<std::size_t> tuple(k);
  std::vector<std::uint32_t> response(alice.size());
  std::vector<std::size_t> chosen(table.size());
  decode(hit, tuple);
  check(tuple, response, &chosen);
  std::vector<Wiring> alice_w;
  std::vector<Wiring> bob_w;
  for (Input v = 0; v < table.size(); ++v) {
    alice_w.emplace_back(pipes, Side::alice, alice[chosen[v]]);
    bob_w.emplace_back(pipes, Side::bob, bob[tuple[column_of[v]]]);
  }
  result.witness = Strategy(table.n(), pipes, std::move(alice_w), std::move(bob_w));
  return result;
}

}  // namespace detail

/// Exact garden-hose complexity by exhaustive search over sizes 0..s_max.
/// Undefined cells are don't-cares. When no size up to s_max works, the
/// report brackets the answer between s_max + 1 and 2^n + 1.
inline SearchReport brute_force_gh(const TruthTable& table, int s_max, const SearchLimits& limits = {}) {
  if (table.n() > limits.max_n) {
    throw Error(ErrorCode::invalid_argument, "exhaustive search is limited to n <= " + std::to_string(limits.max_n));
  }
  if (s_max < 0 || s_max > limits.max_pipes) {
    throw Error(ErrorCode::invalid_argument, "exhaustive search is limited to s <= " + std::to_string(limits.max_pipes));
  }
  SearchReport report;
  for (int s = 0; s <= s_max; ++s) {
    auto r = detail::search_size(table, s, limits.jobs);
    report.nodes += r.nodes;
    report.pruned += r.pruned;
    if (r.witness) {
      report.exact = true;
      report.s_min = s;
      report.lower_bound = s;
      report.upper_bound = s;
      report.witness = std::move(r.witness);
      return report;
    }
  }
  report.lower_bound = s_max + 1;
  report.upper_bound = std::max(s_max + 1, static_cast<int>(table.size()) + 1);
  return report;
}

}  // namespace gardenhose
