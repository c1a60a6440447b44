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
#include <vector>

#include "braidobf/errors.hpp"

namespace braidobf {

// A permutation of {1..n}. Doubles as a simple braid (permutation braid):
// the positive braid in which strand pairs cross at most once. All public
// indices are 1-based; storage is 0-based.
//
// Composition convention, fixed once for the whole library: compose(f, g)
// is "f first, then g" in braid time order, evaluated as f(g(x)). This is
// the pairing under which a generator can start a reduced word for a
// simple braid exactly when its index is a left descent (see descents()).
class Perm {
 public:
  Perm() = default;

  static Perm identity(int n);
  // Adjacent transposition (i, i+1); this is the permutation of sigma_i.
  static Perm transposition(int n, int i);
  // The order reversal i -> n+1-i, i.e. the permutation of the half twist.
  static Perm longest(int n);
  // Validates that images (1-based) form a bijection on {1..n}.
  static Perm from_images(const std::vector<int> &images);

  int degree() const { return static_cast<int>(img_.size()); }
  int image(int i) const { return img_[i - 1] + 1; }
  std::vector<int> images() const;

  Perm inverse() const;
  bool is_identity() const;
  // Number of crossings of the corresponding simple braid.
  int inversions() const;

  // Bit i-1 set iff i is a descent (i in 1..n-1).
  // Left descents {i : f^-1(i) > f^-1(i+1)}: sigma_i left-divides the
  // simple braid of f. Right descents {i : f(i) > f(i+1)}: sigma_i
  // right-divides it.
  std::uint64_t left_descent_mask() const;
  std::uint64_t right_descent_mask() const;

  // In-place: replace f by compose(f, transposition(i)), i.e. append a
  // crossing at the end of the simple word. Swaps adjacent entries.
  void append_transposition(int i);
  // In-place: replace f by compose(transposition(i), f), i.e. strip or
  // prepend a crossing at the front. Swaps adjacent values.
  void prepend_transposition(int i);

  friend bool operator==(const Perm &a, const Perm &b) = default;
  bool operator<(const Perm &b) const { return img_ < b.img_; }

 private:
  explicit Perm(std::vector<std::uint8_t> img) : img_(std::move(img)) {}
  std::vector<std::uint8_t> img_;
};

enum class Side { left, right };

// The permutation "apply f, then g" in braid time order: x -> f(g(x)).
Perm compose(const Perm &f, const Perm &g);

// Descent set as sorted 1-based generator indices.
std::vector<int> descents(const Perm &f, Side side);

// Permutation of the fundamental braid Delta_n (n >= 1).
Perm delta_perm(int n);

// The flip automorphism on permutations: tau(f) = w0 . f . w0. Conjugation
// by Delta_n at the braid level; maps the simple braid of sigma_i to that
// of sigma_{n-i}.
Perm tau(const Perm &f);

// Canonical reduced positive word for the simple braid of f, in time order.
// Length equals inversions(f). Deterministic: values n, n-1, ... are placed
// in turn by adjacent swaps (selection sort), and the swap trace is read
// back to front.
std::vector<int> simple_to_word(const Perm &f);

}  // namespace braidobf
