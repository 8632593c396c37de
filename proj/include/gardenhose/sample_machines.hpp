#pragma once

#include <vector>

#include "gardenhose/turing.hpp"

namespace gardenhose::machines {

namespace detail {

constexpr Symbol kWorkSymbols[] = {Symbol::zero, Symbol::one, Symbol::blank};

/// Swaps blank with `bit` and leaves the other symbol alone; an involution,
/// so storing a bit this way is reversible.
constexpr Symbol toggle(Symbol s, int bit) {
  const Symbol b = bit != 0 ? Symbol::one : Symbol::zero;
  if (s == Symbol::blank) return b;
  if (s == b) return Symbol::blank;
  return s;
}

}  // namespace detail

/// Parity of all 2n input bits, one left-to-right sweep. State (i, p) sits on
/// position i with parity p of the bits before it; the work tape is unused.
inline TuringMachine parity_machine(int n) {
  const int positions = 2 * n;
  const int accept = 2 * positions;
  const int reject = accept + 1;
  TuringMachine m(reject + 1, 1, 0, accept, reject);
  const auto state = [](int i, int p) { return 2 * (i - 1) + p; };
  for (int i = 1; i <= positions; ++i) {
    for (int p = 0; p < 2; ++p) {
      for (int a = 0; a < 2; ++a) {
        for (Symbol w : detail::kWorkSymbols) {
          const int q = p ^ a;
          if (i < positions) {
            m.add_rule(state(i, p), a, w, {state(i + 1, q), w, Move::right, Move::stay});
          } else {
            m.add_rule(state(i, p), a, w, {q == 1 ? accept : reject, w, Move::stay, Move::stay});
          }
        }
      }
    }
  }
  return m;
}

/// Equality. The finite control is a program counter over the oblivious head
/// schedule 1 -> n+1 -> 2 -> n+2 -> ...; the single work cell carries x_i
/// over to position n+i, where a mismatch rejects and a match clears it.
inline TuringMachine equality_machine(int n) {
  enum class Op { read_x, forward, read_y, back };
  std::vector<Op> program;
  for (int i = 1; i <= n; ++i) {
    program.push_back(Op::read_x);
    for (int k = 1; k < n; ++k) program.push_back(Op::forward);
    program.push_back(Op::read_y);
    if (i < n) {
      for (int k = 1; k + 1 < n; ++k) program.push_back(Op::back);
    }
  }
  const int accept = static_cast<int>(program.size());
  const int reject = accept + 1;
  TuringMachine m(reject + 1, 1, 0, accept, reject);
  for (int q = 0; q < accept; ++q) {
    const bool last = q + 1 == accept;
    for (int a = 0; a < 2; ++a) {
      for (Symbol w : detail::kWorkSymbols) {
        switch (program[static_cast<std::size_t>(q)]) {
          case Op::read_x:
            m.add_rule(q, a, w, {q + 1, detail::toggle(w, a), Move::right, Move::stay});
            break;
          case Op::forward:
            m.add_rule(q, a, w, {q + 1, w, Move::right, Move::stay});
            break;
          case Op::back:
            m.add_rule(q, a, w, {q + 1, w, Move::left, Move::stay});
            break;
          case Op::read_y: {
            const bool mismatch = w == (a != 0 ? Symbol::zero : Symbol::one);
            if (mismatch) {
              m.add_rule(q, a, w, {reject, w, Move::stay, Move::stay});
            } else if (last) {
              m.add_rule(q, a, w, {accept, detail::toggle(w, a), Move::stay, Move::stay});
            } else {
              m.add_rule(q, a, w, {q + 1, detail::toggle(w, a), Move::left, Move::stay});
            }
            break;
          }
        }
      }
    }
  }
  return m;
}

/// Not reversible (for n = 1): state 0 remembers x_1 in the state, states 1
/// and 2 then forget it while stepping back to Alice, so both of Bob's
/// boundary runs end in the same configuration. Accepts iff x_1 = 1.
inline TuringMachine merging_machine() {
  TuringMachine m(6, 1, 0, 4, 5);
  for (int a = 0; a < 2; ++a) {
    for (Symbol w : detail::kWorkSymbols) {
      m.add_rule(0, a, w, {a == 0 ? 1 : 2, w, Move::right, Move::stay});
      m.add_rule(1, a, w, {3, w, Move::left, Move::stay});
      m.add_rule(2, a, w, {3, w, Move::left, Move::stay});
      m.add_rule(3, a, w, {a == 1 ? 4 : 5, w, Move::stay, Move::stay});
    }
  }
  return m;
}

}  // namespace gardenhose::machines
