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

#include <string>
#include <utility>
#include <vector>

#include "braidobf/attacks.hpp"
#include "braidobf/braid.hpp"
#include "braidobf/obfuscate.hpp"
#include "braidobf/rgate.hpp"
#include "braidobf/toffoli.hpp"

namespace braidobf {

// Plain-text, whitespace-separated file formats with '#' comments.
// Writers emit a canonical form that readers accept and reproduce
// byte-identically.
//
//   circuit:  "circuit <w>" then one "toffoli <c1> <c2> <t>" per gate
//   braid:    "braid <n>" (or "rcirc <n>") then signed letters, time order
//   nf:       "nf <n> <m> <p>" then p lines of n images
//   state:    "state <n>" then one element per line: five images for the
//             built-in permutation groups, a single index otherwise
//   report:   "key=value" lines

BraidWord parse_braid(const std::string &text);
std::string format_braid(const BraidWord &w, const std::string &kind = "braid");

ToffoliCircuit parse_circuit(const std::string &text);
std::string format_circuit(const ToffoliCircuit &c);

NormalForm parse_nf(const std::string &text);
std::string format_nf(const NormalForm &nf);

DitState parse_state(const std::string &text,
                     std::shared_ptr<const GroupTable> group);
std::string format_state(const DitState &s);

// Ordered key=value report, the machine-readable experiment output.
class Report {
 public:
  void add(const std::string &key, const std::string &value);
  void add(const std::string &key, long long value);
  std::string text() const;
  const std::vector<std::pair<std::string, std::string>> &entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace braidobf
