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
#include <string>

#include "braidobf/braid.hpp"
#include "braidobf/toffoli.hpp"

namespace braidobf {

struct ObfStats {
  std::size_t input_letters = 0;
  std::size_t output_letters = 0;
  std::size_t factor_count = 0;
  long long infimum = 0;

  friend bool operator==(const ObfStats &a, const ObfStats &b) = default;
};

// Output of the obfuscator: the normal form, its flattened word (the
// emitted R-circuit; attacks consume the normal form, executors the
// word), and measurement stats.
struct ObfuscationResult {
  NormalForm nf;
  BraidWord word;
  ObfStats stats;

  friend bool operator==(const ObfuscationResult &a,
                         const ObfuscationResult &b) = default;
};

// Canonicalize an R-circuit by normal-form reduction. Pure and
// deterministic; words related by the braid relations (or free
// insertion/cancellation of inverse pairs) map to identical results,
// and the output simulates identically to the input on every dit state.
ObfuscationResult obfuscate_rcircuit(const BraidWord &w);

enum class ObfMode { naive, randomized, salted };

ObfMode obf_mode_from_string(const std::string &s);
std::string to_string(ObfMode mode);

// The composed pipeline: compile to an R-circuit, optionally apply the
// randomizing or salting countermeasure, then canonicalize.
//   naive:      normal form of the compiled circuit
//   randomized: normal form of randomize_word(compiled, seed)
//   salted:     naive pipeline over salt(c, extra_wires, seed)
// The seed is ignored in naive mode.
ObfuscationResult obfuscate_circuit(const ToffoliCircuit &c, ObfMode mode,
                                    std::uint64_t seed = 0,
                                    int extra_wires = 2);

// Salting countermeasure: append extra wires and surround the circuit
// with seeded random Toffoli gates targeting only salt wires (controls
// may read any wire, so original wires are never written). 4x the
// original gate count, split evenly before and after. The salted circuit
// acts exactly as c on the original wires for every input.
ToffoliCircuit salt(const ToffoliCircuit &c, int extra_wires,
                    std::uint64_t seed);

}  // namespace braidobf
