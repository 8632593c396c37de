#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "gardenhose/model.hpp"
#include "gardenhose/truth_table.hpp"

namespace gardenhose {

enum class Move : std::int8_t { left = -1, stay = 0, right = 1 };

/// Work-tape alphabet. Enumeration order (0, 1, blank) fixes label order.
enum class Symbol : std::uint8_t { zero = 0, one = 1, blank = 2 };

constexpr char to_char(Symbol s) { return s == Symbol::zero ? '0' : s == Symbol::one ? '1' : '_'; }
constexpr char to_char(Move m) { return m == Move::left ? 'L' : m == Move::right ? 'R' : 'S'; }

struct Rule {
  int next_state;
  Symbol write;
  Move input_move;
  Move work_move;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Deterministic machine with a read-only input tape of length 2n (x on
/// positions 1..n, y on n+1..2n) and a work tape of fixed length. It halts in
/// the accept or reject state; a missing rule or a head leaving its tape
/// counts as rejecting.
class TuringMachine {
 public:
  TuringMachine(int states, int work_cells, int start, int accept, int reject)
      : states_(states), work_cells_(work_cells), start_(start), accept_(accept), reject_(reject) {
    if (states < 1) throw Error(ErrorCode::invalid_argument, "machine needs at least one state");
    if (work_cells < 1 || work_cells > 20) throw Error(ErrorCode::invalid_argument, "work tape length must be in [1, 20]");
    for (int q : {start, accept, reject}) check_state(q);
    rules_.resize(static_cast<std::size_t>(states) * 6);
  }

  int states() const noexcept { return states_; }
  int work_cells() const noexcept { return work_cells_; }
  int start() const noexcept { return start_; }
  int accept() const noexcept { return accept_; }
  int reject() const noexcept { return reject_; }

  void add_rule(int state, int input_bit, Symbol work, Rule rule) {
    check_state(state);
    check_state(rule.next_state);
    if (input_bit != 0 && input_bit != 1) throw Error(ErrorCode::invalid_argument, "input symbol must be 0 or 1");
    auto& slot = rules_[slot_index(state, input_bit, work)];
    if (slot) {
      throw Error(ErrorCode::invalid_argument, "two rules for state " + std::to_string(state) + " on (" +
                                                   std::to_string(input_bit) + ", " + to_char(work) + ")");
    }
    slot = rule;
  }

  const std::optional<Rule>& rule(int state, int input_bit, Symbol work) const {
    return rules_[slot_index(state, input_bit, work)];
  }

  bool halting(int state) const { return state == accept_ || state == reject_; }

  friend bool operator==(const TuringMachine&, const TuringMachine&) = default;

 private:
  void check_state(int q) const {
    if (q < 0 || q >= states_) throw Error(ErrorCode::invalid_argument, "state " + std::to_string(q) + " out of range");
  }
  std::size_t slot_index(int state, int input_bit, Symbol work) const {
    return static_cast<std::size_t>(state) * 6 + static_cast<std::size_t>(input_bit) * 3 + static_cast<std::size_t>(work);
  }

  int states_;
  int work_cells_;
  int start_;
  int accept_;
  int reject_;
  std::vector<std::optional<Rule>> rules_;
};

/// Configuration without the input tape contents.
struct Configuration {
  int state = 0;
  int input_pos = 1;
  int work_pos = 0;
  std::vector<Symbol> tape;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// A configuration whose input head has just crossed the x/y boundary:
/// into_alice means it sits on position n coming from n + 1 (the set C_A),
/// otherwise on n + 1 coming from n (C_B).
struct BoundaryConfiguration {
  bool into_alice = true;
  int state = 0;
  int work_pos = 0;
  std::vector<Symbol> tape;

  std::string label() const {
    std::string s = into_alice ? "A:q" : "B:q";
    s += std::to_string(state) + ":h" + std::to_string(work_pos) + ":";
    for (Symbol c : tape) s.push_back(to_char(c));
    return s;
  }

  friend bool operator==(const BoundaryConfiguration&, const BoundaryConfiguration&) = default;
};

enum class Verdict { accept, reject };

constexpr const char* to_string(Verdict v) { return v == Verdict::accept ? "accept" : "reject"; }

namespace detail {

inline std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Step cap: the number of total configurations for a fixed input.
inline std::uint64_t total_configurations(const TuringMachine& m, int n) {
  return static_cast<std::uint64_t>(m.states()) * static_cast<std::uint64_t>(2 * n) *
         static_cast<std::uint64_t>(m.work_cells()) * ipow(3, m.work_cells());
}

enum class StepResult { moved, accepted, rejected };

/// One transition. `read(pos)` returns the input bit at a position in [1, 2n].
template <typename ReadFn>
StepResult step(const TuringMachine& m, int n, Configuration& c, ReadFn&& read) {
  if (c.state == m.accept()) return StepResult::accepted;
  if (c.state == m.reject()) return StepResult::rejected;
  const Symbol work = c.tape[static_cast<std::size_t>(c.work_pos)];
  const auto& rule = m.rule(c.state, read(c.input_pos), work);
  if (!rule) return StepResult::rejected;
  const int ip = c.input_pos + static_cast<int>(rule->input_move);
  const int wp = c.work_pos + static_cast<int>(rule->work_move);
  if (ip < 1 || ip > 2 * n || wp < 0 || wp >= m.work_cells()) return StepResult::rejected;
  c.tape[static_cast<std::size_t>(c.work_pos)] = rule->write;
  c.state = rule->next_state;
  c.input_pos = ip;
  c.work_pos = wp;
  return StepResult::moved;
}

inline int read_input(Input x, Input y, int n, int pos) {
  return pos <= n ? input_bit(x, pos, n) : input_bit(y, pos - n, n);
}

}  // namespace detail

struct TmRun {
  Verdict verdict = Verdict::reject;
  /// Boundary configurations in the order the run produces them.
  std::vector<BoundaryConfiguration> crossings;
  std::uint64_t steps = 0;
};

/// Reference simulation of the machine on (x, y). NONTERMINATING_RUN when the
/// run exceeds the number of total configurations.
inline TmRun simulate_tm_traced(const TuringMachine& m, Input x, Input y, int n) {
  const std::uint64_t cap = detail::total_configurations(m, n);
  Configuration c{m.start(), 1, 0, std::vector<Symbol>(static_cast<std::size_t>(m.work_cells()), Symbol::blank)};
  TmRun run;
  const auto read = [&](int pos) { return detail::read_input(x, y, n, pos); };
  while (true) {
    const int before = c.input_pos;
    const auto r = detail::step(m, n, c, read);
    if (r == detail::StepResult::accepted || r == detail::StepResult::rejected) {
      run.verdict = r == detail::StepResult::accepted ? Verdict::accept : Verdict::reject;
      return run;
    }
    if (++run.steps > cap) throw Error(ErrorCode::nonterminating_run, "run exceeded " + std::to_string(cap) + " steps");
    if ((before == n && c.input_pos == n + 1) || (before == n + 1 && c.input_pos == n)) {
      run.crossings.push_back({c.input_pos == n, c.state, c.work_pos, c.tape});
    }
  }
}

inline Verdict simulate_tm(const TuringMachine& m, Input x, Input y, int n) { return simulate_tm_traced(m, x, y, n).verdict; }

/// Decision table of the machine: accept = 1 (water on Bob's side).
inline TruthTable machine_table(const TuringMachine& m, int n) {
  return TruthTable::from_function(n, [&](Input x, Input y) { return simulate_tm(m, x, y, n) == Verdict::accept; });
}

/// Pipe layout of the compiled strategy: C_A pipes, then C_B, then |C_A|
/// ACCEPT pipes and |C_B| REJECT pipes. Depends only on the machine and n.
class CompiledLayout {
 public:
  CompiledLayout(const TuringMachine& m, int n) : states_(m.states()), cells_(m.work_cells()), n_(n) {
    per_side_ = static_cast<std::uint64_t>(states_) * static_cast<std::uint64_t>(cells_) * detail::ipow(3, cells_);
  }

  int n() const noexcept { return n_; }
  /// |C_A| = |C_B| = states * w * 3^w.
  std::uint64_t boundary_count() const noexcept { return per_side_; }
  std::uint64_t pipe_count() const noexcept { return 4 * per_side_; }

  PipeId pipe_of(const BoundaryConfiguration& b) const {
    std::uint64_t code = 0;
    for (Symbol s : b.tape) code = code * 3 + static_cast<std::uint64_t>(s);
    const std::uint64_t rank =
        (static_cast<std::uint64_t>(b.state) * static_cast<std::uint64_t>(cells_) + static_cast<std::uint64_t>(b.work_pos)) *
            detail::ipow(3, cells_) +
        code;
    return static_cast<PipeId>(1 + (b.into_alice ? 0 : per_side_) + rank);
  }

  BoundaryConfiguration configuration(PipeId pipe) const {
    auto rank = static_cast<std::uint64_t>(pipe - 1);
    BoundaryConfiguration b;
    b.into_alice = rank < per_side_;
    rank %= per_side_;
    const std::uint64_t tapes = detail::ipow(3, cells_);
    std::uint64_t code = rank % tapes;
    rank /= tapes;
    b.work_pos = static_cast<int>(rank % static_cast<std::uint64_t>(cells_));
    b.state = static_cast<int>(rank / static_cast<std::uint64_t>(cells_));
    b.tape.assign(static_cast<std::size_t>(cells_), Symbol::zero);
    for (int i = cells_ - 1; i >= 0; --i) {
      b.tape[static_cast<std::size_t>(i)] = static_cast<Symbol>(code % 3);
      code /= 3;
    }
    return b;
  }

  PipeId accept_pipe(std::uint64_t k) const { return static_cast<PipeId>(1 + 2 * per_side_ + k); }
  PipeId reject_pipe(std::uint64_t k) const { return static_cast<PipeId>(1 + 3 * per_side_ + k); }

  bool is_boundary(PipeId p) const { return p >= 1 && static_cast<std::uint64_t>(p) <= 2 * per_side_; }
  bool is_accept(PipeId p) const { return p > static_cast<PipeId>(2 * per_side_) && p <= static_cast<PipeId>(3 * per_side_); }
  bool is_reject(PipeId p) const { return p > static_cast<PipeId>(3 * per_side_) && p <= static_cast<PipeId>(4 * per_side_); }

  std::string label(PipeId p) const {
    if (is_boundary(p)) return configuration(p).label();
    if (is_accept(p)) return "ACCEPT" + std::to_string(p - 2 * static_cast<PipeId>(per_side_) - 1);
    return "REJECT" + std::to_string(p - 3 * static_cast<PipeId>(per_side_) - 1);
  }

 private:
  int states_;
  int cells_;
  int n_;
  std::uint64_t per_side_ = 0;
};

struct CompileOptions {
  std::uint64_t max_pipes = std::uint64_t{1} << 20;
  int jobs = 1;
};

/// Enumerates C_A and C_B syntactically (every state, work-head position and
/// tape content), so the layout never depends on the inputs.
inline CompiledLayout enumerate_boundary(const TuringMachine& m, int n, std::uint64_t max_pipes = std::uint64_t{1} << 20) {
  if (n < 1 || n > kMaxInputBits) throw Error(ErrorCode::invalid_argument, "n must be in [1, 13]");
  // states * w * 3^w must not overflow before the cap check.
  const double estimate = 4.0 * m.states() * m.work_cells() * static_cast<double>(detail::ipow(3, m.work_cells()));
  if (estimate > static_cast<double>(max_pipes)) {
    throw Error(ErrorCode::layout_too_large, "layout needs " + std::to_string(static_cast<std::uint64_t>(estimate)) +
                                                 " pipes, cap is " + std::to_string(max_pipes));
  }
  return CompiledLayout(m, n);
}

struct CompiledStrategy {
  CompiledLayout layout;
  Strategy strategy;
};

namespace detail {

enum class HalfOutcome { accepted, rejected, crossed };

/// Runs on one half of the input tape until the machine halts or its input
/// head crosses into the other half; `c` then holds the crossing configuration.
/// `visit` sees every later configuration whose input head is on this side's
/// boundary cell.
template <typename VisitFn>
HalfOutcome run_half(const TuringMachine& m, int n, Side side, Input own, Configuration& c, std::uint64_t cap, VisitFn&& visit) {
  const auto read = [&](int pos) { return side == Side::alice ? input_bit(own, pos, n) : input_bit(own, pos - n, n); };
  const int boundary = side == Side::alice ? n : n + 1;
  for (std::uint64_t steps = 0;; ++steps) {
    if (steps > cap) throw Error(ErrorCode::nonterminating_run, "run exceeded " + std::to_string(cap) + " steps");
    const int before = c.input_pos;
    const auto r = step(m, n, c, read);
    if (r == StepResult::accepted) return HalfOutcome::accepted;
    if (r == StepResult::rejected) return HalfOutcome::rejected;
    if (side == Side::alice && before == n && c.input_pos == n + 1) return HalfOutcome::crossed;
    if (side == Side::bob && before == n + 1 && c.input_pos == n) return HalfOutcome::crossed;
    if (c.input_pos == boundary) visit(c);
  }
}

/// One party's wiring for one input: every boundary pipe on that party's side
/// (plus the tap for Alice) is joined to wherever the simulated run goes next.
///
/// Boundary configurations are enumerated syntactically, so some of them are
/// passed through in the middle of another run. For a reversible machine such
/// a configuration is never entered across the boundary (it would have two
/// predecessors), so its pipe is left unconnected instead of colliding.
inline Wiring compiled_wiring(const TuringMachine& m, const CompiledLayout& layout, Side side, Input own) {
  const int n = layout.n();
  const auto pipes = static_cast<int>(layout.pipe_count());
  const std::uint64_t cap = total_configurations(m, n);
  const std::uint64_t k = layout.boundary_count();
  const PipeId first = side == Side::alice ? 1 : static_cast<PipeId>(1 + k);

  struct Run {
    PipeId source;
    Configuration end;
    HalfOutcome outcome;
  };
  std::vector<Run> runs;
  std::vector<bool> interior(static_cast<std::size_t>(k), false);
  const auto mark = [&](const Configuration& c) {
    const PipeId p = layout.pipe_of({side == Side::alice, c.state, c.work_pos, c.tape});
    interior[static_cast<std::size_t>(p - first)] = true;
  };
  const auto simulate = [&](PipeId source, Configuration c) {
    const auto outcome = run_half(m, n, side, own, c, cap, mark);
    runs.push_back({source, std::move(c), outcome});
  };

  const Configuration start{m.start(), 1, 0, std::vector<Symbol>(static_cast<std::size_t>(m.work_cells()), Symbol::blank)};
  if (side == Side::alice) {
    simulate(kTap, start);
    // With n = 1 the start configuration is itself a C_A element.
    if (n == 1) mark(start);
  }
  for (PipeId p = first; p < first + static_cast<PipeId>(k); ++p) {
    const auto b = layout.configuration(p);
    simulate(p, Configuration{b.state, side == Side::alice ? n : n + 1, b.work_pos, b.tape});
  }

  std::vector<Connection> pairs;
  std::vector<PipeId> claimed_by(static_cast<std::size_t>(pipes) + 1, kNoPartner);
  std::uint64_t halting_used = 0;
  for (const Run& r : runs) {
    if (r.source != kTap && interior[static_cast<std::size_t>(r.source - first)]) continue;
    PipeId target = kNoPartner;
    if (r.outcome == HalfOutcome::crossed) {
      target = layout.pipe_of({side == Side::bob, r.end.state, r.end.work_pos, r.end.tape});
    } else if ((r.outcome == HalfOutcome::accepted) == (side == Side::alice)) {
      // Alice sends accepting runs to Bob through ACCEPT pipes; Bob sends
      // rejecting runs back through REJECT pipes.
      if (halting_used == k) throw Error(ErrorCode::layout_too_large, "more halting runs than ACCEPT/REJECT pipes");
      target = side == Side::alice ? layout.accept_pipe(halting_used) : layout.reject_pipe(halting_used);
      ++halting_used;
    }
    if (target == kNoPartner) continue;
    PipeId& owner = claimed_by[static_cast<std::size_t>(target)];
    if (owner != kNoPartner) {
      const auto name = [&](PipeId p) { return p == kTap ? std::string("tap") : layout.label(p); };
      throw Error(ErrorCode::reversibility_violation, std::string(to_string(side)) + " input " + to_bits(own, n) +
                                                          ": runs from " + name(owner) + " and " + name(r.source) +
                                                          " both reach pipe " + layout.label(target));
    }
    owner = r.source;
    pairs.push_back({r.source, target});
  }
  return Wiring(pipes, side, std::move(pairs));
}

}  // namespace detail

/// Compiles a reversible machine into a garden-hose strategy that computes
/// its decision (accept = water on Bob's side). A collision between two runs
/// on the same target pipe raises REVERSIBILITY_VIOLATION.
inline CompiledStrategy compile(const TuringMachine& m, int n, const CompileOptions& options = {}) {
  CompiledLayout layout = enumerate_boundary(m, n, options.max_pipes);
  const Input inputs = static_cast<Input>(input_count(n));
  std::vector<std::optional<Wiring>> alice(inputs);
  std::vector<std::optional<Wiring>> bob(inputs);
  std::vector<std::exception_ptr> errors(inputs);

  const auto build = [&](Input v) {
    try {
      alice[v] = detail::compiled_wiring(m, layout, Side::alice, v);
      bob[v] = detail::compiled_wiring(m, layout, Side::bob, v);
    } catch (...) {
      errors[v] = std::current_exception();
    }
  };
  const int workers = std::clamp<int>(options.jobs, 1, static_cast<int>(inputs));
  if (workers == 1) {
    for (Input v = 0; v < inputs; ++v) build(v);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (auto v = static_cast<Input>(w); v < inputs; v += static_cast<Input>(workers)) build(v);
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Wiring> alice_w;
  std::vector<Wiring> bob_w;
  for (Input v = 0; v < inputs; ++v) {
    alice_w.push_back(std::move(*alice[v]));
    bob_w.push_back(std::move(*bob[v]));
  }
  const auto pipes = static_cast<int>(layout.pipe_count());
  return CompiledStrategy{layout, Strategy(n, pipes, std::move(alice_w), std::move(bob_w))};
}

}  // namespace gardenhose
