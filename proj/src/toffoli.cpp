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

#include "braidobf/toffoli.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace braidobf {

ToffoliGate::ToffoliGate(int control_a, int control_b, int target)
    : c1(std::min(control_a, control_b)),
      c2(std::max(control_a, control_b)),
      t(target) {
  if (control_a == control_b)
    throw DomainError("toffoli gate: controls must be distinct");
  if (t == c1 || t == c2)
    throw DomainError("toffoli gate: target must differ from controls");
  if (c1 < 1 || t < 1) throw DomainError("toffoli gate: wires are 1-based");
}

ToffoliCircuit::ToffoliCircuit(int wire_count,
                               std::vector<ToffoliGate> gate_list)
    : wires(wire_count), gates(std::move(gate_list)) {
  if (wires < 3) throw DomainError("circuit: wire count must be >= 3");
  for (const ToffoliGate &g : gates)
    if (g.c2 > wires || g.t > wires)
      throw DomainError("circuit: gate wire index exceeds wire count");
}

std::vector<int> apply_circuit_bits(const ToffoliCircuit &c,
                                    std::vector<int> bits) {
  if (static_cast<int>(bits.size()) != c.wires)
    throw DomainError("bit vector size differs from wire count");
  for (const ToffoliGate &g : c.gates)
    bits[g.t - 1] ^= bits[g.c1 - 1] & bits[g.c2 - 1];
  return bits;
}

Layout::Layout(int wire_count) : wires(wire_count) {
  if (wires < 3) throw DomainError("layout: wire count must be >= 3");
  if (strands() > 64)
    throw DomainError("layout: strand count above supported limit of 64");
}

std::vector<int> Layout::catalyst_elements(const GroupTable &g) const {
  std::vector<int> out;
  out.reserve(4);
  for (const char *cyc : kCatalystCycles)
    out.push_back(g.element_of_cycles(cyc));
  return out;
}

DitState Layout::encoded_state(const std::vector<int> &bits,
                               std::shared_ptr<const GroupTable> g) const {
  if (static_cast<int>(bits.size()) != wires)
    throw DomainError("encoded_state: one bit per logical wire required");
  std::vector<int> dit_values = catalyst_elements(*g);
  const int zero = g->element_of_cycles(kEncodedZeroCycle);
  const int one = g->element_of_cycles(kEncodedOneCycle);
  for (const int b : bits) {
    if (b != 0 && b != 1) throw DomainError("encoded_state: bits must be 0/1");
    dit_values.push_back(b ? one : zero);
  }
  DitState s;
  s.group = std::move(g);
  s.dits.reserve(static_cast<std::size_t>(strands()));
  for (const int v : dit_values) {
    s.dits.push_back(v);
    s.dits.push_back(s.group->inv(v));
  }
  return s;
}

std::optional<std::vector<int>> Layout::decode_state(const DitState &s) const {
  if (s.size() != strands()) return std::nullopt;
  const GroupTable &g = *s.group;
  for (int j = 0; j < dits(); ++j)
    if (s.dits[2 * j + 1] != g.inv(s.dits[2 * j])) return std::nullopt;
  const std::vector<int> catalysts = catalyst_elements(g);
  for (int j = 0; j < 4; ++j)
    if (s.dits[2 * j] != catalysts[j]) return std::nullopt;
  const int zero = g.element_of_cycles(kEncodedZeroCycle);
  const int one = g.element_of_cycles(kEncodedOneCycle);
  std::vector<int> bits;
  bits.reserve(static_cast<std::size_t>(wires));
  for (int k = 1; k <= wires; ++k) {
    const int v = s.dits[2 * (wire_dit(k) - 1)];
    if (v == zero)
      bits.push_back(0);
    else if (v == one)
      bits.push_back(1);
    else
      return std::nullopt;
  }
  return bits;
}

std::vector<int> swap_macro(int j, const Layout &layout) {
  if (j < 1 || j >= layout.dits())
    throw DomainError("swap_macro: dit index out of range");
  return {2 * j, 2 * j - 1, 2 * j + 1, 2 * j};
}

std::vector<int> conj_macro(int j, int sign, const Layout &layout) {
  if (j < 1 || j >= layout.dits())
    throw DomainError("conj_macro: dit index out of range");
  if (sign != 1 && sign != -1)
    throw DomainError("conj_macro: sign must be +1 or -1");
  std::vector<int> letters{2 * j, 2 * j + 1, 2 * j + 1, 2 * j};
  if (sign < 0)
    for (int &a : letters) a = -a;
  return letters;
}

std::vector<int> routed_conj(int control, int target, int sign,
                             const Layout &layout) {
  if (control == target)
    throw DomainError("routed_conj: control equals target");
  if (control < 1 || control > layout.dits() || target < 1 ||
      target > layout.dits())
    throw DomainError("routed_conj: dit index out of range");
  std::vector<int> out;
  auto emit = [&out](const std::vector<int> &letters) {
    out.insert(out.end(), letters.begin(), letters.end());
  };
  std::vector<std::vector<int>> entry;
  if (control < target) {
    // Walk the control down until it sits just above the target.
    for (int j = control; j <= target - 2; ++j)
      entry.push_back(swap_macro(j, layout));
    for (const auto &s : entry) emit(s);
    emit(conj_macro(target - 1, sign, layout));
  } else {
    // Walk the control up to the dit below the target, then swap the pair
    // once so the conjugation can run downward, and swap back.
    for (int j = control - 1; j >= target + 1; --j)
      entry.push_back(swap_macro(j, layout));
    for (const auto &s : entry) emit(s);
    emit(swap_macro(target, layout));
    emit(conj_macro(target, sign, layout));
    emit(swap_macro(target, layout));
  }
  for (auto it = entry.rbegin(); it != entry.rend(); ++it) emit(*it);
  return out;
}

namespace {

// The nine conjugations of the construction for the canonical placement:
// target on dit 5, controls on dits 6 and 7. Only strands 1..13 are
// touched, so the word is independent of the layout width.
std::vector<int> canonical_core(const Layout &layout) {
  const std::pair<int, int> schedule[9] = {{4, +1}, {7, -1}, {2, +1},
                                           {6, -1}, {3, +1}, {7, +1},
                                           {1, +1}, {6, +1}, {4, +1}};
  std::vector<int> letters;
  for (const auto &[control, sign] : schedule) {
    const std::vector<int> part = routed_conj(control, 5, sign, layout);
    letters.insert(letters.end(), part.begin(), part.end());
  }
  return letters;
}

}  // namespace

BraidWord compile_toffoli(const ToffoliGate &gate, const Layout &layout) {
  if (gate.c2 > layout.wires || gate.t > layout.wires)
    throw DomainError("compile_toffoli: gate exceeds layout wires");
  // Route the contents of the target and control dits to the canonical
  // dits 5, 6, 7 (in that order, top-down) with encoded swaps, run the
  // fixed core, and undo the routing. Keeping the core placement-free is
  // what makes the middle normal-form factors depend only on the strand
  // count; for the canonical placement the network is empty.
  int pt = layout.wire_dit(gate.t);
  int p1 = layout.wire_dit(gate.c1);
  int p2 = layout.wire_dit(gate.c2);
  std::vector<std::vector<int>> entry;
  auto walk_up = [&](int from, int dest) {
    for (int j = from - 1; j >= dest; --j) {
      entry.push_back(swap_macro(j, layout));
      auto track = [j](int &p) {
        if (p == j)
          p = j + 1;
        else if (p == j + 1)
          p = j;
      };
      track(pt);
      track(p1);
      track(p2);
    }
  };
  walk_up(pt, 5);
  walk_up(p1, 6);
  walk_up(p2, 7);

  std::vector<int> letters;
  for (const auto &s : entry)
    letters.insert(letters.end(), s.begin(), s.end());
  const std::vector<int> core = canonical_core(layout);
  letters.insert(letters.end(), core.begin(), core.end());
  for (auto it = entry.rbegin(); it != entry.rend(); ++it)
    letters.insert(letters.end(), it->begin(), it->end());
  return BraidWord(layout.strands(), std::move(letters));
}

BraidWord compile_circuit(const ToffoliCircuit &c) {
  const Layout layout(c.wires);
  BraidWord out(layout.strands(), {});
  for (const ToffoliGate &g : c.gates)
    out = concat(out, compile_toffoli(g, layout));
  return out;
}

BraidWord randomize_word(const BraidWord &w, std::uint64_t seed, int order) {
  if (order < 2) throw DomainError("randomize_word: order must be >= 2");
  std::mt19937_64 rng(seed);
  BraidWord out;
  out.n = w.n;
  for (const int a : w.letters) {
    if (a > 0 && (rng() & 1) != 0) {
      for (int k = 0; k < order - 1; ++k) out.letters.push_back(-a);
    } else {
      out.letters.push_back(a);
    }
  }
  return out;
}

}  // namespace braidobf
