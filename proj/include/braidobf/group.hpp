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

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "braidobf/errors.hpp"

namespace braidobf {

// A finite group given by an explicit multiplication table. Elements are
// identified by their index in a canonical order; element 0 is always the
// identity. The built-ins A5 and S5 store their elements as permutations
// of {1..5} in lexicographic image order, so indices are stable and cycle
// constants like (14352) can be resolved to indices.
//
// Multiplication convention matches Perm composition: mul(a, b) applies b
// first, then a, when elements act as functions.
class GroupTable {
 public:
  static const GroupTable &a5();
  static const GroupTable &s5();

  // Parse an explicit table: line 1 "group <d>", then d rows of d 0-based
  // product indices. Element 0 must be the identity. The group axioms are
  // verified exhaustively; d is capped at 256 to keep that check honest.
  static GroupTable from_table_text(const std::string &text);

  const std::string &name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int a, int b) const;  // b^-1 a b

  // Built-ins only (elements are permutations of five symbols).
  bool has_images() const { return !images_.empty(); }
  const std::array<std::uint8_t, 5> &images(int a) const { return images_[a]; }
  // Resolve cycle notation such as "(14352)", "(12)(34)" or "()".
  int element_of_cycles(const std::string &cycles) const;
  // Cycle notation for built-ins, "e<index>" for custom groups.
  std::string element_name(int a) const;

  // Conjugacy class of a (within this group), as a sorted index list.
  std::vector<int> conjugacy_class(int a) const;

 private:
  GroupTable() = default;
  static GroupTable from_permutations(
      std::string name, std::vector<std::array<std::uint8_t, 5>> elems);
  void check_axioms();

  std::string name_;
  int order_ = 0;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::array<std::uint8_t, 5>> images_;
};

// The initial dit values of the universal-computation construction:
// the four catalyst cycles, the two encoded-bit cycles, and all their
// inverses. Resolved against the given built-in group.
std::vector<int> appendix_seed_elements(const GroupTable &g);

// Cycle strings for the four catalyst dits, in dit order 1..4.
extern const std::array<const char *, 4> kCatalystCycles;
// Encoded zero and encoded one.
extern const char *const kEncodedZeroCycle;
extern const char *const kEncodedOneCycle;

}  // namespace braidobf
