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
#include <span>
#include <string>
#include <vector>

#include "braidobf/obfuscate.hpp"

namespace braidobf {

// Result of testing one Toffoli placement as the last gate of an
// obfuscated circuit: strip the guess (append the inverse of its compiled
// braid and renormalize) and look at the residual infimum. A non-negative
// infimum keeps the guess alive; the canonical-length delta is the
// length-based attack's heuristic signal.
struct GuessReport {
  ToffoliGate gate;
  bool positive_after_strip = false;
  long long infimum_after_strip = 0;
  long long canonical_length_delta = 0;
};

// All Toffoli placements on w wires: ordered pairs {c1 < c2} times the
// remaining targets, in deterministic order.
std::vector<ToffoliGate> all_placements(int wires);

// Normal form of obf with the guess's compiled braid stripped from the
// right.
NormalForm strip_gate(const NormalForm &obf, const ToffoliGate &gate,
                      const Layout &layout);

// One report per placement, in all_placements order.
std::vector<GuessReport> guess_last_gate(const NormalForm &obf,
                                         const Layout &layout);

// canonical-letter-count(strip) - canonical-letter-count(obf); negative
// values are heuristic evidence for a correct guess.
long long length_attack_score(const NormalForm &obf, const ToffoliGate &gate,
                              const Layout &layout);

struct PeelResult {
  bool success = false;
  ToffoliCircuit circuit;
  int rounds = 0;
  bool ambiguous = false;  // some round had multiple surviving guesses
  std::string reason;      // failure diagnostic when success is false
};

// Iterated last-gate peeling: accept the unique positivity-passing guess,
// strip it, and repeat until the trivial braid remains. Fails on zero
// surviving guesses, on ambiguity (unless backtracking is enabled, which
// searches all surviving guesses depth-first), or after max_gates rounds.
PeelResult peel_circuit(const NormalForm &obf, const Layout &layout,
                        int max_gates, bool backtrack = false);

// Recompute the obfuscation of every candidate under the same mode and
// seed policy and return the index of the first exact normal-form match.
std::optional<std::size_t> dictionary_attack(
    const ObfuscationResult &obf, std::span<const ToffoliCircuit> candidates,
    ObfMode mode, std::uint64_t seed = 0, int extra_wires = 2);

// Left-gcd of two positive obfuscation outputs. When the sources share a
// compiled common prefix, that prefix left-divides the result.
BraidWord gcd_strip(const ObfuscationResult &a, const ObfuscationResult &b);

}  // namespace braidobf
