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

#include "braidobf/attacks.hpp"

#include <algorithm>

namespace braidobf {

std::vector<ToffoliGate> all_placements(int wires) {
  std::vector<ToffoliGate> out;
  for (int c1 = 1; c1 <= wires; ++c1)
    for (int c2 = c1 + 1; c2 <= wires; ++c2)
      for (int t = 1; t <= wires; ++t)
        if (t != c1 && t != c2) out.emplace_back(c1, c2, t);
  return out;
}

NormalForm strip_gate(const NormalForm &obf, const ToffoliGate &gate,
                      const Layout &layout) {
  if (obf.n != layout.strands())
    throw DomainError("strip_gate: strand count differs from layout");
  const BraidWord guess = compile_toffoli(gate, layout);
  return nf_product(obf, normal_form(invert(guess)));
}

std::vector<GuessReport> guess_last_gate(const NormalForm &obf,
                                         const Layout &layout) {
  const long long base_length = obf.canonical_letter_count();
  std::vector<GuessReport> out;
  for (const ToffoliGate &gate : all_placements(layout.wires)) {
    const NormalForm stripped = strip_gate(obf, gate, layout);
    GuessReport r;
    r.gate = gate;
    r.infimum_after_strip = stripped.m;
    r.positive_after_strip = stripped.m >= 0;
    r.canonical_length_delta =
        stripped.canonical_letter_count() - base_length;
    out.push_back(r);
  }
  return out;
}

long long length_attack_score(const NormalForm &obf, const ToffoliGate &gate,
                              const Layout &layout) {
  return strip_gate(obf, gate, layout).canonical_letter_count() -
         obf.canonical_letter_count();
}

namespace {

// Depth-first peeling; gates are recovered last-to-first.
bool peel_recurse(const NormalForm &residual, const Layout &layout,
                  int remaining, bool backtrack,
                  const std::vector<ToffoliGate> &placements,
                  std::vector<ToffoliGate> &reversed, PeelResult &result) {
  if (residual.is_trivial()) return true;
  if (remaining == 0) {
    result.reason = "gate budget exhausted before reaching the trivial braid";
    return false;
  }
  std::vector<std::pair<ToffoliGate, NormalForm>> surviving;
  for (const ToffoliGate &gate : placements) {
    NormalForm stripped = strip_gate(residual, gate, layout);
    if (stripped.m >= 0) surviving.emplace_back(gate, std::move(stripped));
  }
  if (surviving.empty()) {
    result.reason = "no guess leaves a positive residual";
    return false;
  }
  if (surviving.size() > 1) {
    result.ambiguous = true;
    if (!backtrack) {
      result.reason = "ambiguous round: " +
                      std::to_string(surviving.size()) +
                      " guesses leave a positive residual";
      return false;
    }
  }
  for (auto &[gate, stripped] : surviving) {
    reversed.push_back(gate);
    ++result.rounds;
    if (peel_recurse(stripped, layout, remaining - 1, backtrack, placements,
                     reversed, result))
      return true;
    reversed.pop_back();
    if (!backtrack) return false;
  }
  if (result.reason.empty())
    result.reason = "all branches exhausted without reaching the trivial braid";
  return false;
}

}  // namespace

PeelResult peel_circuit(const NormalForm &obf, const Layout &layout,
                        int max_gates, bool backtrack) {
  PeelResult result;
  const std::vector<ToffoliGate> placements = all_placements(layout.wires);
  std::vector<ToffoliGate> reversed;
  if (peel_recurse(obf, layout, max_gates, backtrack, placements, reversed,
                   result)) {
    std::reverse(reversed.begin(), reversed.end());
    result.success = true;
    result.circuit = ToffoliCircuit(layout.wires, std::move(reversed));
    result.reason.clear();
  }
  return result;
}

std::optional<std::size_t> dictionary_attack(
    const ObfuscationResult &obf, std::span<const ToffoliCircuit> candidates,
    ObfMode mode, std::uint64_t seed, int extra_wires) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const ObfuscationResult candidate =
        obfuscate_circuit(candidates[i], mode, seed, extra_wires);
    if (candidate.nf == obf.nf) return i;
  }
  return std::nullopt;
}

BraidWord gcd_strip(const ObfuscationResult &a, const ObfuscationResult &b) {
  if (!is_positive(a.nf) || !is_positive(b.nf))
    throw DomainError("gcd_strip: both inputs must be positive braids");
  return left_gcd(a.word, b.word);
}

}  // namespace braidobf
