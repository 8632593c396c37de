#pragma once

#include <map>
#include <string>
#include <vector>

#include "gardenhose/model.hpp"
#include "gardenhose/truth_table.hpp"

namespace gardenhose {

namespace detail {

inline void require_n(int n) {
  if (n < 1 || n > kMaxInputBits) throw Error(ErrorCode::invalid_argument, "n must be in [1, 13]");
}

/// Builds a strategy by calling the two per-input wiring generators.
template <typename AliceFn, typename BobFn>
Strategy tabulate(int n, int pipes, AliceFn&& alice_pairs, BobFn&& bob_pairs) {
  std::vector<Wiring> alice;
  std::vector<Wiring> bob;
  for (Input v = 0; v < input_count(n); ++v) {
    alice.emplace_back(pipes, Side::alice, alice_pairs(v));
    bob.emplace_back(pipes, Side::bob, bob_pairs(v));
  }
  return Strategy(n, pipes, std::move(alice), std::move(bob));
}

}  // namespace detail

/// Three-pipe XOR gadget. Alice sends the water into pipe 1 or 2 according
/// to the parity of x; Bob joins the pipe matching the parity of y to the
/// return pipe 3, so the water comes back to Alice exactly when the parities agree.
inline Strategy build_xor(int n) {
  detail::require_n(n);
  return detail::tabulate(
      n, 3,
      [](Input x) { return std::vector<Connection>{{kTap, 1 + (popcount(x) & 1)}}; },
      [](Input y) { return std::vector<Connection>{{1 + (popcount(y) & 1), 3}}; });
}

/// Equality, checked one bit per stage with the leader alternating.
///
/// Stage i owns value pipes V(i,0), V(i,1); stages led by Alice (odd i) also
/// own a return pipe W(i). The leader pours into V(i, own bit). On a match the
/// follower forwards the water into the next stage, which it then leads; on a
/// mismatch the water must end with Alice: in Alice-led stages Bob sends it back
/// through W(i) (left open by Alice), in Bob-led stages Alice simply leaves
/// V(i, 1 - x_i) open. After the last match the water must end with Bob, which
/// costs one extra pipe F when the last stage is Bob-led.
///
/// s = ceil(5n / 2) for odd n, 5n/2 + 1 for even n.
inline Strategy build_eq(int n) {
  detail::require_n(n);
  std::vector<PipeId> value_base(static_cast<std::size_t>(n) + 2, 0);
  std::vector<PipeId> ret(static_cast<std::size_t>(n) + 2, 0);
  PipeId next = 1;
  for (int i = 1; i <= n; ++i) {
    value_base[static_cast<std::size_t>(i)] = next;
    next += 2;
    if (i % 2 == 1) ret[static_cast<std::size_t>(i)] = next++;
  }
  const PipeId final_pipe = n % 2 == 0 ? next++ : 0;
  const int pipes = next - 1;
  const auto value = [&](int i, int bit) { return value_base[static_cast<std::size_t>(i)] + bit; };

  return detail::tabulate(
      n, pipes,
      [&](Input x) {
        std::vector<Connection> pairs{{kTap, value(1, input_bit(x, 1, n))}};
        for (int i = 2; i <= n; i += 2) {
          const PipeId in = value(i, input_bit(x, i, n));
          pairs.push_back({in, i < n ? value(i + 1, input_bit(x, i + 1, n)) : final_pipe});
        }
        return pairs;
      },
      [&](Input y) {
        std::vector<Connection> pairs;
        for (int i = 1; i <= n; i += 2) {
          const int bit = input_bit(y, i, n);
          pairs.push_back({value(i, 1 - bit), ret[static_cast<std::size_t>(i)]});
          if (i < n) pairs.push_back({value(i, bit), value(i + 1, input_bit(y, i + 1, n))});
        }
        return pairs;
      });
}

/// Inner product mod 2. Index i owns two "parity in" pipes In(i, p) and two
/// "parity out" pipes Out(i, p); Bob joins In(i, p) with Out(i, p xor y_i).
/// Alice threads the water through the indices where x_i = 1, in order, and
/// finally sends odd parity to Bob through the exit pipe 4n + 1.
inline Strategy build_ip(int n) {
  detail::require_n(n);
  const int pipes = 4 * n + 1;
  const auto in = [](int i, int p) { return 4 * (i - 1) + 1 + p; };
  const auto out = [](int i, int p) { return 4 * (i - 1) + 3 + p; };
  return detail::tabulate(
      n, pipes,
      [&](Input x) {
        std::vector<Connection> pairs;
        int last = 0;
        for (int i = 1; i <= n; ++i) {
          if (input_bit(x, i, n) == 0) continue;
          if (last == 0) {
            pairs.push_back({kTap, in(i, 0)});
          } else {
            pairs.push_back({out(last, 0), in(i, 0)});
            pairs.push_back({out(last, 1), in(i, 1)});
          }
          last = i;
        }
        if (last != 0) pairs.push_back({out(last, 1), pipes});
        return pairs;
      },
      [&](Input y) {
        std::vector<Connection> pairs;
        for (int i = 1; i <= n; ++i) {
          const int bit = input_bit(y, i, n);
          pairs.push_back({in(i, 0), out(i, bit)});
          pairs.push_back({in(i, 1), out(i, 1 - bit)});
        }
        return pairs;
      });
}

/// Majority of the pairwise products. Like build_ip but the water carries a
/// count instead of a parity: index i has incoming count pipes In(i, c) for
/// c < i and outgoing Out(i, c) for c <= i, and Bob joins In(i, c) with
/// Out(i, c + y_i), which is one-to-one. Counts reaching ceil(n/2) leave
/// through their own exit pipe.
inline Strategy build_maj(int n) {
  detail::require_n(n);
  const int threshold = (n + 1) / 2;
  const auto in = [](int i, int c) { return i * i + c; };
  const auto out = [](int i, int c) { return i * i + i + c; };
  const PipeId exit_base = n * n + 2 * n + 1;
  const int pipes = exit_base + (n - threshold);
  return detail::tabulate(
      n, pipes,
      [&](Input x) {
        std::vector<Connection> pairs;
        int last = 0;
        for (int i = 1; i <= n; ++i) {
          if (input_bit(x, i, n) == 0) continue;
          if (last == 0) {
            pairs.push_back({kTap, in(i, 0)});
          } else {
            for (int c = 0; c <= last; ++c) pairs.push_back({out(last, c), in(i, c)});
          }
          last = i;
        }
        for (int c = threshold; c <= last; ++c) pairs.push_back({out(last, c), exit_base + (c - threshold)});
        return pairs;
      },
      [&](Input y) {
        std::vector<Connection> pairs;
        for (int i = 1; i <= n; ++i) {
          const int bit = input_bit(y, i, n);
          for (int c = 0; c < i; ++c) pairs.push_back({in(i, c), out(i, c + bit)});
        }
        return pairs;
      });
}

/// Generic 2^n + 1 construction: Alice pours into pipe x + 1; Bob pairs the
/// rows a with f(a, y) = 0 in ascending order, the odd one out going to the
/// reserve pipe 2^n + 1.
inline Strategy build_generic(const TruthTable& table) {
  table.require_total();
  const int n = table.n();
  const auto reserve = static_cast<PipeId>(table.size()) + 1;
  return detail::tabulate(
      n, reserve, [](Input x) { return std::vector<Connection>{{kTap, static_cast<PipeId>(x) + 1}}; },
      [&](Input y) {
        std::vector<PipeId> zeros;
        for (Input a = 0; a < table.size(); ++a) {
          if (table.at(a, y) == Cell::zero) zeros.push_back(static_cast<PipeId>(a) + 1);
        }
        std::vector<Connection> pairs;
        for (std::size_t k = 0; k + 1 < zeros.size(); k += 2) pairs.push_back({zeros[k], zeros[k + 1]});
        if (zeros.size() % 2 == 1) pairs.push_back({zeros.back(), reserve});
        return pairs;
      });
}

/// A transcript of a two-party protocol: `length` bits, the first sent bit
/// being the most significant bit of `bits`.
struct Transcript {
  int length = 0;
  std::uint32_t bits = 0;

  Transcript child(int bit) const { return {length + 1, (bits << 1) | static_cast<std::uint32_t>(bit)}; }
  int last_bit() const { return static_cast<int>(bits & 1U); }
  Transcript parent() const { return {length - 1, bits >> 1}; }

  /// Heap-style index: root 0, then 1, 2 for length 1, and so on.
  std::size_t index() const { return ((std::size_t{1} << length) - 1) + bits; }

  std::string str() const {
    if (length == 0) return "-";
    std::string s;
    for (int i = length - 1; i >= 0; --i) s.push_back(((bits >> i) & 1U) != 0 ? '1' : '0');
    return s;
  }

  static Transcript parse(std::string_view text) {
    Transcript t;
    if (text == "-") return t;
    for (char c : text) {
      if (c != '0' && c != '1') throw Error(ErrorCode::invalid_argument, "bad transcript '" + std::string(text) + "'");
      t = t.child(c - '0');
    }
    return t;
  }

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

/// Alice speaks at transcripts of even length, Bob at odd length.
constexpr Side sender(const Transcript& t) { return t.length % 2 == 0 ? Side::alice : Side::bob; }

/// Deterministic protocol tree of depth D in which the players alternate
/// sending one bit, Alice first. Leaves carry an output per x: Alice knows
/// the answer once the transcript is complete.
class ProtocolTree {
 public:
  ProtocolTree(int n, int depth) : n_(n), depth_(depth) {
    detail::require_n(n);
    if (depth < 0 || depth > 16) throw Error(ErrorCode::invalid_argument, "protocol depth must be in [0, 16]");
    nodes_.resize((std::size_t{1} << depth) - 1);
    leaves_.resize(std::size_t{1} << depth);
  }

  int n() const noexcept { return n_; }
  int depth() const noexcept { return depth_; }

  /// Sender's bit per private input at an internal node.
  void set_message(Transcript v, std::vector<bool> bits) {
    if (v.length >= depth_) throw Error(ErrorCode::inconsistent_tree, "node " + v.str() + " is not internal");
    check_width(bits, v);
    auto& slot = nodes_[v.index()];
    if (!slot.empty()) throw Error(ErrorCode::inconsistent_tree, "node " + v.str() + " defined twice");
    slot = std::move(bits);
  }

  /// Output per x at a leaf.
  void set_leaf(Transcript v, std::vector<bool> bits) {
    if (v.length != depth_) throw Error(ErrorCode::inconsistent_tree, "leaf " + v.str() + " has the wrong depth");
    check_width(bits, v);
    auto& slot = leaves_[v.bits];
    if (!slot.empty()) throw Error(ErrorCode::inconsistent_tree, "leaf " + v.str() + " defined twice");
    slot = std::move(bits);
  }

  bool message(Transcript v, Input input) const { return nodes_[v.index()][input]; }
  bool leaf(Transcript v, Input x) const { return leaves_[v.bits][x]; }

  /// INCONSISTENT_TREE unless every internal node and leaf is defined.
  void check() const {
    for (int len = 0; len < depth_; ++len) {
      for (std::uint32_t b = 0; b < (1U << len); ++b) {
        const Transcript v{len, b};
        if (nodes_[v.index()].empty()) throw Error(ErrorCode::inconsistent_tree, "missing node " + v.str());
      }
    }
    for (std::uint32_t b = 0; b < (1U << depth_); ++b) {
      if (leaves_[b].empty()) throw Error(ErrorCode::inconsistent_tree, "missing leaf " + Transcript{depth_, b}.str());
    }
  }

  Transcript run(Input x, Input y) const {
    Transcript v;
    while (v.length < depth_) v = v.child(message(v, sender(v) == Side::alice ? x : y) ? 1 : 0);
    return v;
  }

  bool output(Input x, Input y) const { return leaf(run(x, y), x); }

  TruthTable table() const {
    check();
    return TruthTable::from_function(n_, [this](Input x, Input y) { return output(x, y); });
  }

  /// Same protocol with an extra round in which Bob always sends 0 and the
  /// leaves inherit their parent's output.
  ProtocolTree padded() const {
    check();
    ProtocolTree out(n_, depth_ + 1);
    for (int len = 0; len < depth_; ++len) {
      for (std::uint32_t b = 0; b < (1U << len); ++b) out.set_message({len, b}, nodes_[Transcript{len, b}.index()]);
    }
    for (std::uint32_t b = 0; b < (1U << depth_); ++b) {
      const Transcript v{depth_, b};
      out.set_message(v, std::vector<bool>(input_count(n_), false));
      out.set_leaf(v.child(0), leaves_[b]);
      out.set_leaf(v.child(1), leaves_[b]);
    }
    return out;
  }

  friend bool operator==(const ProtocolTree&, const ProtocolTree&) = default;

 private:
  void check_width(const std::vector<bool>& bits, Transcript v) const {
    if (bits.size() != input_count(n_)) {
      throw Error(ErrorCode::inconsistent_tree, "node " + v.str() + " needs " + std::to_string(input_count(n_)) + " bits");
    }
  }

  int n_;
  int depth_;
  std::vector<std::vector<bool>> nodes_;
  std::vector<std::vector<bool>> leaves_;
};

/// Pipe carrying transcript v (length >= 1): 2^|v| - 1 + value.
inline PipeId transcript_pipe(Transcript v) { return static_cast<PipeId>(v.index()); }

/// Garden-hose strategy simulating a protocol tree. Pipes are the non-empty
/// transcripts, so after r <= D hops the water sits in the pipe labelled by
/// the r-bit transcript. Odd depths are padded with a silent Bob round first.
///
/// Leaves are handled at each Alice node u of depth D - 2 that sends the water
/// to v = u a. If both leaves under v output 1, Alice joins them, so the water
/// crosses back through the leaf Bob did not pick (whose Bob end is open). If
/// exactly one leaf vb outputs 1, Alice routes it into the sibling pipe u(1-a),
/// which no run consistent with x uses, and joins that sibling's two leaves:
/// whichever leaf Bob picks there, the other one exits on his side.
inline Strategy build_from_protocol(const ProtocolTree& input_tree) {
  input_tree.check();
  if (input_tree.depth() % 2 == 1) return build_from_protocol(input_tree.padded());
  const ProtocolTree& tree = input_tree;
  const int n = tree.n();
  const int depth = tree.depth();

  if (depth == 0) {
    return detail::tabulate(
        n, 1,
        [&](Input x) {
          return tree.leaf({}, x) ? std::vector<Connection>{{kTap, 1}} : std::vector<Connection>{};
        },
        [](Input) { return std::vector<Connection>{}; });
  }

  const int pipes = static_cast<int>((std::size_t{2} << depth) - 2);
  return detail::tabulate(
      n, pipes,
      [&](Input x) {
        std::vector<Connection> pairs;
        for (int len = 0; len <= depth - 2; len += 2) {
          for (std::uint32_t b = 0; b < (1U << len); ++b) {
            const Transcript u{len, b};
            const int a = tree.message(u, x) ? 1 : 0;
            const Transcript v = u.child(a);
            pairs.push_back({len == 0 ? kTap : transcript_pipe(u), transcript_pipe(v)});
            if (len != depth - 2) continue;
            const bool c0 = tree.leaf(v.child(0), x);
            const bool c1 = tree.leaf(v.child(1), x);
            if (c0 && c1) {
              pairs.push_back({transcript_pipe(v.child(0)), transcript_pipe(v.child(1))});
            } else if (c0 != c1) {
              const Transcript sibling = u.child(1 - a);
              pairs.push_back({transcript_pipe(v.child(c1 ? 1 : 0)), transcript_pipe(sibling)});
              pairs.push_back({transcript_pipe(sibling.child(0)), transcript_pipe(sibling.child(1))});
            }
          }
        }
        return pairs;
      },
      [&](Input y) {
        std::vector<Connection> pairs;
        for (int len = 1; len <= depth - 1; len += 2) {
          for (std::uint32_t b = 0; b < (1U << len); ++b) {
            const Transcript v{len, b};
            pairs.push_back({transcript_pipe(v), transcript_pipe(v.child(tree.message(v, y) ? 1 : 0))});
          }
        }
        return pairs;
      });
}

}  // namespace gardenhose
