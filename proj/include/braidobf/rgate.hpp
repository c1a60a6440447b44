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
#include <memory>
#include <utility>
#include <vector>

#include "braidobf/braid.hpp"
#include "braidobf/group.hpp"

namespace braidobf {

// One dit per braid strand, each holding an element of a fixed finite
// group. The pair gate R acts on neighbouring strands.
struct DitState {
  std::shared_ptr<const GroupTable> group;
  std::vector<int> dits;

  int size() const { return static_cast<int>(dits.size()); }
  friend bool operator==(const DitState &a, const DitState &b) {
    return a.dits == b.dits && a.group->name() == b.group->name() &&
           a.group->order() == b.group->order();
  }
};

// Shared handles to the built-in tables (they are static singletons).
std::shared_ptr<const GroupTable> a5_table();
std::shared_ptr<const GroupTable> s5_table();

// The conjugation gate of the quantum double: (a, b) -> (b, b^-1 a b).
std::pair<int, int> r_gate(const GroupTable &g, int a, int b);
// Its inverse: (x, y) -> (x y x^-1, x).
std::pair<int, int> r_gate_inv(const GroupTable &g, int x, int y);

// Run a braid word as an R-circuit: letter i applies the gate to dits
// (i, i+1) in time order, negative letters apply the inverse gate.
DitState simulate(const BraidWord &w, const DitState &s);
// In-place variant over raw dit values.
void simulate_inplace(const BraidWord &w, const GroupTable &g,
                      std::vector<int> &dits);

// An arbitrary reversible gate on ordered pairs of d-state dits. Pairs are
// indexed row-major: (a, b) -> a*d + b.
struct PairGate {
  int d = 0;
  std::vector<std::int32_t> map;  // bijection on d*d points

  std::pair<int, int> apply(int a, int b) const {
    const std::int32_t t = map[a * d + b];
    return {t / d, t % d};
  }
  friend bool operator==(const PairGate &a, const PairGate &b) = default;
};

PairGate identity_gate(int d);
PairGate swap_gate(int d);
PairGate inverse_gate(const PairGate &g);
// R over an explicit group, as a pair gate with d = |G|.
PairGate r_pair_gate(const GroupTable &g);

// Exhaustive check of R1 R2 R1 = R2 R1 R2 over all d^3 triples.
bool check_yang_baxter(const PairGate &g);

// Least k >= 1 with g^k the identity on pairs (lcm of cycle lengths).
unsigned long long gate_order(const PairGate &g);

// Closure of a set of elements under multiplication, as sorted indices.
std::vector<int> generated_subgroup(const GroupTable &g,
                                    const std::vector<int> &gens);

// Orbit of a seed set under the gate: all conjugates of seed elements by
// the subgroup the seed generates.
std::vector<int> orbit_under_r(const GroupTable &g,
                               const std::vector<int> &seed);

// Restrict a pair gate to a sub-alphabet (sorted parent indices). Throws
// DomainError if some pair over the orbit maps outside orbit x orbit.
PairGate restrict_gate(const PairGate &g, const std::vector<int> &orbit);

// All bijections on d^2 points satisfying the Yang-Baxter equation, for
// d in {2, 3}. Brute force over (d^2)! candidates; larger d is out of
// range for this method.
std::vector<PairGate> ybe_search(int d);

}  // namespace braidobf
