#pragma once

#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gardenhose/evaluate.hpp"
#include "gardenhose/model.hpp"
#include "gardenhose/truth_table.hpp"

namespace gardenhose {

using Literal = int;
using Clause = std::vector<Literal>;

enum class VarKind { alice, bob, at, hop, live };

constexpr const char* to_string(VarKind k) {
  switch (k) {
    case VarKind::alice: return "alice";
    case VarKind::bob: return "bob";
    case VarKind::at: return "at";
    case VarKind::hop: return "hop";
    case VarKind::live: return "live";
  }
  return "?";
}

/// Meaning of one SAT variable.
///   alice x i j   : Alice joins endpoints i and j on input x
///   bob y i j     : Bob joins pipes i and j on input y
///   at x y t p    : after t hops the water sits in pipe p
///   hop x y t p q : at x y t p and the hose p-q on the arrival side
///   live x y t    : the water makes at least t hops
struct VarMeaning {
  VarKind kind;
  std::vector<int> indices;

  std::string str() const {
    std::string s = to_string(kind);
    for (int i : indices) s += " " + std::to_string(i);
    return s;
  }

  friend bool operator==(const VarMeaning&, const VarMeaning&) = default;
};

/// Variable id -> meaning, plus the instance dimensions needed to decode.
struct VarMap {
  int n = 1;
  int pipes = 0;
  std::vector<VarMeaning> meanings;  // meanings[id - 1]

  friend bool operator==(const VarMap&, const VarMap&) = default;
};

struct CNFInstance {
  int variables = 0;
  std::vector<Clause> clauses;
  VarMap varmap;
};

namespace detail {

class CnfBuilder {
 public:
  explicit CnfBuilder(CNFInstance& cnf) : cnf_(cnf) {}

  int add_var(VarKind kind, std::vector<int> indices) {
    cnf_.varmap.meanings.push_back({kind, std::move(indices)});
    return ++cnf_.variables;
  }

  void clause(Clause c) { cnf_.clauses.push_back(std::move(c)); }

  void at_most_one(const std::vector<int>& vars) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = i + 1; j < vars.size(); ++j) clause({-vars[i], -vars[j]});
    }
  }

 private:
  CNFInstance& cnf_;
};

/// Pair-variable ids for one party: id[i][j] with i < j, 0 where undefined.
using PairVars = std::vector<std::vector<int>>;

inline int pair_var(const PairVars& vars, PipeId i, PipeId j) {
  return i < j ? vars[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
               : vars[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
}

}  // namespace detail

/// CNF that is satisfiable iff some strategy with exactly `pipes` pipes
/// computes every defined cell. Flow is unrolled for s + 1 hops, which
/// covers every simple path.
inline CNFInstance encode_sat(const TruthTable& table, int pipes) {
  if (pipes < 0) throw Error(ErrorCode::invalid_argument, "pipe count must be non-negative");
  CNFInstance cnf;
  cnf.varmap.n = table.n();
  cnf.varmap.pipes = pipes;
  detail::CnfBuilder b(cnf);
  const auto size = static_cast<std::size_t>(pipes) + 1;

  std::vector<detail::PairVars> alice(table.size(), detail::PairVars(size, std::vector<int>(size, 0)));
  std::vector<detail::PairVars> bob(table.size(), detail::PairVars(size, std::vector<int>(size, 0)));
  for (Input x = 0; x < table.size(); ++x) {
    for (PipeId i = 0; i <= pipes; ++i) {
      for (PipeId j = i + 1; j <= pipes; ++j) {
        alice[x][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            b.add_var(VarKind::alice, {static_cast<int>(x), i, j});
      }
    }
  }
  for (Input y = 0; y < table.size(); ++y) {
    for (PipeId i = 1; i <= pipes; ++i) {
      for (PipeId j = i + 1; j <= pipes; ++j) {
        bob[y][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            b.add_var(VarKind::bob, {static_cast<int>(y), i, j});
      }
    }
  }
  const auto matching = [&](const detail::PairVars& vars, PipeId low) {
    for (PipeId e = low; e <= pipes; ++e) {
      std::vector<int> incident;
      for (PipeId f = low; f <= pipes; ++f) {
        if (f != e) incident.push_back(detail::pair_var(vars, e, f));
      }
      b.at_most_one(incident);
    }
  };
  for (const auto& vars : alice) matching(vars, kTap);
  for (const auto& vars : bob) matching(vars, 1);

  const int horizon = pipes + 1;
  for (Input x = 0; x < table.size(); ++x) {
    for (Input y = 0; y < table.size(); ++y) {
      const Cell want = table.at(x, y);
      if (want == Cell::undefined) continue;
      const int cx = static_cast<int>(x);
      const int cy = static_cast<int>(y);
      // at[t][p], t = 1..horizon
      std::vector<std::vector<int>> at(static_cast<std::size_t>(horizon) + 1, std::vector<int>(size, 0));
      for (int t = 1; t <= horizon; ++t) {
        for (PipeId p = 1; p <= pipes; ++p) {
          at[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)] = b.add_var(VarKind::at, {cx, cy, t, p});
        }
      }
      for (PipeId p = 1; p <= pipes; ++p) {
        const int a = at[1][static_cast<std::size_t>(p)];
        const int tap = detail::pair_var(alice[x], kTap, p);
        b.clause({-a, tap});
        b.clause({a, -tap});
      }
      for (int t = 1; t < horizon; ++t) {
        // After t hops the water is on Bob's side iff t is odd.
        const auto& conn = t % 2 == 1 ? bob[y] : alice[x];
        std::vector<std::vector<int>> into(size);
        for (PipeId p = 1; p <= pipes; ++p) {
          for (PipeId q = 1; q <= pipes; ++q) {
            if (p == q) continue;
            const int z = b.add_var(VarKind::hop, {cx, cy, t, p, q});
            const int here = at[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
            const int hose = detail::pair_var(conn, p, q);
            b.clause({-z, here});
            b.clause({-z, hose});
            b.clause({z, -here, -hose});
            b.clause({-z, at[static_cast<std::size_t>(t) + 1][static_cast<std::size_t>(q)]});
            into[static_cast<std::size_t>(q)].push_back(z);
          }
        }
        for (PipeId q = 1; q <= pipes; ++q) {
          Clause c{-at[static_cast<std::size_t>(t) + 1][static_cast<std::size_t>(q)]};
          for (int z : into[static_cast<std::size_t>(q)]) c.push_back(z);
          b.clause(std::move(c));
        }
      }
      std::vector<int> live(static_cast<std::size_t>(horizon) + 1, 0);
      for (int t = 1; t <= horizon; ++t) {
        live[static_cast<std::size_t>(t)] = b.add_var(VarKind::live, {cx, cy, t});
        Clause any{-live[static_cast<std::size_t>(t)]};
        for (PipeId p = 1; p <= pipes; ++p) {
          const int a = at[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
          any.push_back(a);
          b.clause({-a, live[static_cast<std::size_t>(t)]});
        }
        b.clause(std::move(any));
      }
      // The walk stops at the last live hop; its parity is the exit side.
      if (want == Cell::one) {
        b.clause({live[1]});
        for (int t = 2; t < horizon; t += 2) b.clause({-live[static_cast<std::size_t>(t)], live[static_cast<std::size_t>(t) + 1]});
      } else {
        for (int t = 1; t < horizon; t += 2) b.clause({-live[static_cast<std::size_t>(t)], live[static_cast<std::size_t>(t) + 1]});
      }
    }
  }
  return cnf;
}

/// Assignment indexed by variable id (slot 0 unused).
using Assignment = std::vector<bool>;

/// Index of the first clause the assignment falsifies, if any.
inline std::optional<std::size_t> first_violated(const CNFInstance& cnf, const Assignment& assignment) {
  for (std::size_t c = 0; c < cnf.clauses.size(); ++c) {
    bool sat = false;
    for (Literal l : cnf.clauses[c]) {
      const bool value = assignment[static_cast<std::size_t>(std::abs(l))];
      if ((l > 0) == value) {
        sat = true;
        break;
      }
    }
    if (!sat) return c;
  }
  return std::nullopt;
}

inline bool satisfies(const CNFInstance& cnf, const Assignment& assignment) {
  return !first_violated(cnf, assignment).has_value();
}

/// The assignment a concrete strategy induces on every variable of the
/// encoding: wiring variables from its wirings, flow variables from its walks.
inline Assignment assignment_from_strategy(const VarMap& varmap, const Strategy& strategy) {
  if (strategy.n() != varmap.n || strategy.pipes() != varmap.pipes) {
    throw Error(ErrorCode::dimension_mismatch, "strategy does not match the encoding's n and s");
  }
  std::map<std::pair<Input, Input>, std::vector<PipeId>> walks;
  const auto walk_of = [&](int x, int y) -> const std::vector<PipeId>& {
    const auto key = std::make_pair(static_cast<Input>(x), static_cast<Input>(y));
    auto it = walks.find(key);
    if (it == walks.end()) it = walks.emplace(key, evaluate(strategy, key.first, key.second).pipes()).first;
    return it->second;
  };
  const auto pipe_after = [&](int x, int y, int t) -> PipeId {
    const auto& w = walk_of(x, y);
    return t >= 1 && static_cast<std::size_t>(t) <= w.size() ? w[static_cast<std::size_t>(t) - 1] : kNoPartner;
  };

  Assignment out(varmap.meanings.size() + 1, false);
  for (std::size_t id = 1; id <= varmap.meanings.size(); ++id) {
    const auto& m = varmap.meanings[id - 1];
    const auto& ix = m.indices;
    switch (m.kind) {
      case VarKind::alice:
        out[id] = strategy.partner(Side::alice, static_cast<Input>(ix[0]), ix[1]) == ix[2];
        break;
      case VarKind::bob:
        out[id] = strategy.partner(Side::bob, static_cast<Input>(ix[0]), ix[1]) == ix[2];
        break;
      case VarKind::at:
        out[id] = pipe_after(ix[0], ix[1], ix[2]) == ix[3];
        break;
      case VarKind::hop: {
        const Side side = ix[2] % 2 == 1 ? Side::bob : Side::alice;
        const auto input = static_cast<Input>(side == Side::alice ? ix[0] : ix[1]);
        out[id] = pipe_after(ix[0], ix[1], ix[2]) == ix[3] && strategy.partner(side, input, ix[3]) == ix[4];
        break;
      }
      case VarKind::live:
        out[id] = pipe_after(ix[0], ix[1], ix[2]) != kNoPartner;
        break;
    }
  }
  return out;
}

/// Rebuilds the strategy encoded by a model's wiring variables.
/// `model` holds signed literals; variables not mentioned count as false,
/// but every wiring variable must be mentioned.
inline Strategy decode_sat(const std::vector<Literal>& model, const VarMap& varmap) {
  std::vector<std::optional<bool>> value(varmap.meanings.size() + 1);
  for (Literal l : model) {
    const auto id = static_cast<std::size_t>(std::abs(l));
    if (l == 0 || id > varmap.meanings.size()) continue;
    value[id] = l > 0;
  }
  const Input inputs = static_cast<Input>(input_count(varmap.n));
  std::vector<std::vector<Connection>> alice(inputs);
  std::vector<std::vector<Connection>> bob(inputs);
  for (std::size_t id = 1; id <= varmap.meanings.size(); ++id) {
    const auto& m = varmap.meanings[id - 1];
    if (m.kind != VarKind::alice && m.kind != VarKind::bob) continue;
    if (!value[id]) throw Error(ErrorCode::invalid_argument, "model leaves wiring variable " + std::to_string(id) + " unassigned");
    if (!*value[id]) continue;
    auto& target = m.kind == VarKind::alice ? alice : bob;
    target.at(static_cast<std::size_t>(m.indices[0])).push_back({m.indices[1], m.indices[2]});
  }
  std::vector<Wiring> aw;
  std::vector<Wiring> bw;
  for (Input v = 0; v < inputs; ++v) {
    aw.emplace_back(varmap.pipes, Side::alice, alice[v]);
    bw.emplace_back(varmap.pipes, Side::bob, bob[v]);
    for (const Wiring* w : {&aw.back(), &bw.back()}) {
      if (auto issue = validate_wiring(*w)) {
        throw Error(ErrorCode::model_violates_matching, std::string(to_string(w->side())) + " input " +
                                                            std::to_string(v) + ": " + issue->detail);
      }
    }
  }
  return Strategy(varmap.n, varmap.pipes, std::move(aw), std::move(bw));
}

}  // namespace gardenhose
