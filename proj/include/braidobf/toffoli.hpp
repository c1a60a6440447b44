// Copyright 2026 The braidobf developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braidobf/braid.hpp"
#include "braidobf/rgate.hpp"

namespace braidobf {

// A doubly-controlled NOT. Controls are unordered and stored sorted;
// the target must differ from both.
struct ToffoliGate {
  ToffoliGate() = default;
  ToffoliGate(int control_a, int control_b, int target);

  int c1 = 1, c2 = 2, t = 3;

  friend bool operator==(const ToffoliGate &a, const ToffoliGate &b) = default;
};

// A reversible circuit over Toffoli gates on `wires` logical wires
// (wires >= 3), gates in time order.
struct ToffoliCircuit {
  ToffoliCircuit() = default;
  ToffoliCircuit(int wire_count, std::vector<ToffoliGate> gate_list);

  int wires = 3;
  std::vector<ToffoliGate> gates;

  friend bool operator==(const ToffoliCircuit &a,
                         const ToffoliCircuit &b) = default;
};

// Bit-level reference semantics: b_t ^= b_c1 & b_c2 per gate.
std::vector<int> apply_circuit_bits(const ToffoliCircuit &c,
                                    std::vector<int> bits);

// Strand/dit embedding of a w-wire circuit. Encoded dit j occupies strands
// 2j-1 and 2j, holding a group element next to its inverse. Dits 1..4 are
// the fixed catalysts; logical wire k lives on dit 4+k. Bits are encoded
// as three-cycles: 0 -> (345), 1 -> (435).
struct Layout {
  explicit Layout(int wire_count);

  int wires;
  int dits() const { return wires + 4; }
  int strands() const { return 2 * (wires + 4); }
  int wire_dit(int k) const { return 4 + k; }

  // Element indices of the four catalysts in the given built-in group.
  std::vector<int> catalyst_elements(const GroupTable &g) const;
  // Full strand state for the given logical input bits (one per wire).
  DitState encoded_state(const std::vector<int> &bits,
                         std::shared_ptr<const GroupTable> g) const;
  // Decode a strand state: logical bits if every dit holds a valid encoded
  // pair with catalysts restored, std::nullopt otherwise.
  std::optional<std::vector<int>> decode_state(const DitState &s) const;
};

// Swap of the encoded dits (j, j+1): four positive letters in time order.
std::vector<int> swap_macro(int j, const Layout &layout);

// Conjugation of encoded dit j+1 by encoded dit j (sign +1), or by its
// inverse (sign -1): four letters, negated for sign -1. The control dit
// is unchanged.
std::vector<int> conj_macro(int j, int sign, const Layout &layout);

// Conjugation between arbitrary encoded dits: a nearest-neighbour swap
// network moves the control next to the target (swapping control and
// target once more when the control sits below), applies conj_macro, and
// exactly undoes the network. Every dit except the target is restored.
std::vector<int> routed_conj(int control, int target, int sign,
                             const Layout &layout);

// The nine-conjugation construction realizing a Toffoli on encoded bits:
// the target dit is conjugated, in time order, by catalyst 4, the inverse
// of control c2, catalyst 2, the inverse of control c1, catalyst 3,
// control c2, catalyst 1, control c1 and catalyst 4 again. The gate's
// dits are first routed to the canonical positions 5, 6, 7 by a positive
// swap network that is exactly undone afterwards, so the braid element is
// positive with a fixed fourteen-factor normal form whose middle factors
// do not depend on the wire choice. On encoded inputs the braid computes
// b_t ^= b_c1 & b_c2 and restores everything else, catalysts included.
BraidWord compile_toffoli(const ToffoliGate &gate, const Layout &layout);

// Concatenation of compile_toffoli over the circuit's gates, on the
// layout derived from the circuit's wire count.
BraidWord compile_circuit(const ToffoliCircuit &c);

// Randomized-compiler countermeasure: each positive letter independently,
// with probability 1/2, becomes order-1 copies of its inverse (the gate
// has the given finite order, so the R-circuit functionality is
// unchanged). Inverse letters pass through. Deterministic given the seed.
BraidWord randomize_word(const BraidWord &w, std::uint64_t seed,
                         int order = 60);

}  // namespace braidobf
