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

#include "braidobf/obfuscate.hpp"

#include <random>

namespace braidobf {

namespace {

ObfuscationResult package(const BraidWord &input, NormalForm nf) {
  ObfuscationResult out;
  out.word = word_of(nf);
  out.stats.input_letters = input.size();
  out.stats.output_letters = out.word.size();
  out.stats.factor_count = nf.factor_count();
  out.stats.infimum = nf.m;
  out.nf = std::move(nf);
  return out;
}

}  // namespace

ObfuscationResult obfuscate_rcircuit(const BraidWord &w) {
  return package(w, normal_form(w));
}

ObfMode obf_mode_from_string(const std::string &s) {
  if (s == "naive") return ObfMode::naive;
  if (s == "randomized") return ObfMode::randomized;
  if (s == "salted") return ObfMode::salted;
  throw FormatError("unknown obfuscation mode '" + s + "'");
}

std::string to_string(ObfMode mode) {
  switch (mode) {
    case ObfMode::naive:
      return "naive";
    case ObfMode::randomized:
      return "randomized";
    case ObfMode::salted:
      return "salted";
  }
  return "?";
}

ObfuscationResult obfuscate_circuit(const ToffoliCircuit &c, ObfMode mode,
                                    std::uint64_t seed, int extra_wires) {
  switch (mode) {
    case ObfMode::naive: {
      const BraidWord compiled = compile_circuit(c);
      return package(compiled, normal_form(compiled));
    }
    case ObfMode::randomized: {
      const BraidWord randomized =
          randomize_word(compile_circuit(c), seed);
      return package(randomized, normal_form(randomized));
    }
    case ObfMode::salted: {
      const BraidWord compiled = compile_circuit(salt(c, extra_wires, seed));
      return package(compiled, normal_form(compiled));
    }
  }
  throw DomainError("unreachable obfuscation mode");
}

ToffoliCircuit salt(const ToffoliCircuit &c, int extra_wires,
                    std::uint64_t seed) {
  if (extra_wires < 1) throw DomainError("salt: extra_wires must be >= 1");
  const int total = c.wires + extra_wires;
  std::mt19937_64 rng(seed);
  const std::size_t count = 4 * c.gates.size();

  auto random_salt_gate = [&]() {
    std::uniform_int_distribution<int> salt_wire(c.wires + 1, total);
    const int t = salt_wire(rng);
    // Controls may read any wire except the target; only salt wires are
    // ever written, so the original wires evolve exactly as in c.
    std::uniform_int_distribution<int> any_wire(1, total);
    int a = t;
    while (a == t) a = any_wire(rng);
    int b = t;
    while (b == t || b == a) b = any_wire(rng);
    return ToffoliGate(a, b, t);
  };

  std::vector<ToffoliGate> gates;
  gates.reserve(count + c.gates.size());
  for (std::size_t k = 0; k < count / 2; ++k)
    gates.push_back(random_salt_gate());
  gates.insert(gates.end(), c.gates.begin(), c.gates.end());
  for (std::size_t k = count / 2; k < count; ++k)
    gates.push_back(random_salt_gate());
  return ToffoliCircuit(total, std::move(gates));
}

}  // namespace braidobf
