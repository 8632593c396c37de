#pragma once

#include <bit>
#include <string>
#include <vector>

#include "gardenhose/evaluate.hpp"
#include "gardenhose/model.hpp"

namespace gardenhose {

/// One-way protocol derived from a strategy: Alice sends her wiring, Bob
/// finishes the walk locally.
using Bits = std::vector<bool>;

/// Bits per partner field: ceil(log2(s + 2)), enough for 0..s plus "none".
inline int partner_field_width(int pipes) {
  return static_cast<int>(std::bit_width(static_cast<unsigned>(pipes + 1)));
}

inline std::size_t message_length(int pipes) {
  return static_cast<std::size_t>(pipes + 1) * static_cast<std::size_t>(partner_field_width(pipes));
}

/// Fixed-width partner table for endpoints 0..s; value s+1 means "none".
inline Bits encode_wiring(const Wiring& w) {
  const int width = partner_field_width(w.pipes());
  Bits out;
  out.reserve(message_length(w.pipes()));
  for (PipeId p : w.partners()) {
    const auto value = static_cast<unsigned>(p == kNoPartner ? w.pipes() + 1 : p);
    for (int b = width - 1; b >= 0; --b) out.push_back(((value >> b) & 1U) != 0);
  }
  return out;
}

inline Bits alice_message(const Strategy& strategy, Input x) { return encode_wiring(strategy.alice(x)); }

inline Wiring decode_alice_message(const Bits& message, int pipes) {
  if (message.size() != message_length(pipes)) {
    throw Error(ErrorCode::malformed_message, "expected " + std::to_string(message_length(pipes)) + " bits, got " +
                                                  std::to_string(message.size()));
  }
  const int width = partner_field_width(pipes);
  std::vector<PipeId> partner(static_cast<std::size_t>(pipes) + 1);
  for (int e = 0; e <= pipes; ++e) {
    unsigned value = 0;
    for (int b = 0; b < width; ++b) value = (value << 1) | (message[static_cast<std::size_t>(e * width + b)] ? 1U : 0U);
    if (value > static_cast<unsigned>(pipes + 1)) {
      throw Error(ErrorCode::malformed_message, "partner field " + std::to_string(e) + " out of range");
    }
    partner[static_cast<std::size_t>(e)] = value == static_cast<unsigned>(pipes + 1) ? kNoPartner : static_cast<PipeId>(value);
  }
  std::vector<Connection> pairs;
  for (PipeId e = 0; e <= pipes; ++e) {
    const PipeId p = partner[static_cast<std::size_t>(e)];
    if (p == kNoPartner) continue;
    if (p == e || partner[static_cast<std::size_t>(p)] != e) {
      throw Error(ErrorCode::malformed_message, "partner table is not a matching at endpoint " + std::to_string(e));
    }
    if (e < p) pairs.push_back({e, p});
  }
  return Wiring(pipes, Side::alice, std::move(pairs));
}

/// Bob's output given Alice's message and his own wiring (0 = Alice, 1 = Bob).
inline int bob_decide(const Bits& message, const Wiring& bob_wiring) {
  if (bob_wiring.side() != Side::bob) throw Error(ErrorCode::invalid_wiring, "expected a Bob wiring");
  if (auto issue = validate_wiring(bob_wiring)) throw Error(ErrorCode::invalid_wiring, issue->detail);
  const Wiring alice = decode_alice_message(message, bob_wiring.pipes());
  const auto alice_partner = alice.partners();
  const auto bob_partner = bob_wiring.partners();
  WaterPosition pos;
  const auto lookup = [&](Side side, PipeId e) {
    return (side == Side::alice ? alice_partner : bob_partner)[static_cast<std::size_t>(e)];
  };
  while (auto next = advance(lookup, pos)) pos = *next;
  return exit_bit(pos.at.side);
}

}  // namespace gardenhose
