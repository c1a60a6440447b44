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
#include <utility>
#include <vector>

#include "braidobf/perm.hpp"

namespace braidobf {

// A word over the braid generators of B_n. Letter k (positive) is sigma_k,
// letter -k is sigma_k^-1, with 1 <= k <= n-1. Letters are stored in TIME
// order: the leftmost letter is applied first. The empty word is the
// identity braid.
struct BraidWord {
  BraidWord() = default;
  BraidWord(int strands, std::vector<int> time_letters);

  int n = 1;
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool all_positive() const;
  // Sum of letter signs; conserved by the braid relations.
  long long exponent_sum() const;

  friend bool operator==(const BraidWord &a, const BraidWord &b) = default;
};

// Concatenation in time order (a first, then b).
BraidWord concat(const BraidWord &a, const BraidWord &b);

// Reverse the letter sequence and negate each letter.
BraidWord invert(const BraidWord &w);

// Apply the flip automorphism letter-wise: i -> n-i, preserving signs.
BraidWord tau_word(const BraidWord &w);

// Image under the projection B_n -> S_n, sigma_i -> (i, i+1). A
// homomorphism for the library's composition convention: the image of a
// concatenation is compose() of the images, in time order.
Perm permutation_image(const BraidWord &w);

// The left-greedy normal form Delta_n^m . s_1 ... s_p: an integer infimum
// m plus a normal sequence of simple factors, none the identity, the first
// not equal to Delta_n's permutation, and every adjacent pair (s_j, s_j+1)
// left-weighted: each generator left-dividing s_j+1 right-divides s_j.
// Equal braid elements have identical normal forms.
struct NormalForm {
  int n = 1;
  long long m = 0;
  std::vector<Perm> factors;

  std::size_t factor_count() const { return factors.size(); }
  bool is_trivial() const { return m == 0 && factors.empty(); }
  // Letter count of word_of(): |m| * n(n-1)/2 + total factor inversions.
  long long canonical_letter_count() const;

  friend bool operator==(const NormalForm &a, const NormalForm &b) = default;
};

// Local normalization step. Returns the unique left-weighted pair with the
// same product: while some generator left-divides v but does not
// right-divide u, slide one crossing from the front of v to the back of u.
// Total inversion count is conserved.
std::pair<Perm, Perm> left_weight_pair(const Perm &u, const Perm &v);

// Reduce a word to its normal form. Inverse letters are eliminated in a
// single right-to-left sweep: each sigma_i^-1 becomes Delta_n^-1 times the
// simple braid with permutation w0 . t_i, and the accumulated Delta powers
// flip interleaved letters as they pass. The factor sequence is then
// normalized by local left-weighting until every adjacent pair is
// left-weighted, leading Delta factors are absorbed into m, and trailing
// identities are dropped.
NormalForm normal_form(const BraidWord &w);

// Back-translation. Emits |m| copies of the canonical Delta word (reversed
// and negated when m < 0) followed by the canonical word of each factor.
// normal_form(word_of(nf)) == nf.
BraidWord word_of(const NormalForm &nf);

// Normal form of the product (in time order: a, then b) computed directly
// on normal forms, without flattening a to a word.
NormalForm nf_product(const NormalForm &a, const NormalForm &b);

// Normal form of sigma_i^-1 . (the element of nf). Requires that sigma_i
// left-divides the element; the quotient stays positive when nf was.
NormalForm nf_strip_left_atom(const NormalForm &nf, int i);

// Generator indices whose sigma left-divides the (positive) element.
std::uint64_t leading_atom_mask(const NormalForm &nf);

// True iff the element lies in the positive monoid, i.e. m >= 0. The
// distinguishing signal of the last-gate attack.
bool is_positive(const NormalForm &nf);

// Left-greatest common divisor of two positive words, as a positive word.
// Recursive common-atom extraction: while some sigma_i left-divides both,
// emit it and strip it from both sides. Throws DomainError on non-positive
// input or strand mismatch.
BraidWord left_gcd(const BraidWord &a, const BraidWord &b);

// True iff the element of d left-divides the element of x.
bool left_divides(const NormalForm &d, const NormalForm &x);

// Throws DomainError unless nf satisfies the normal-form invariants:
// matching degrees, no identity factor, first factor not Delta's
// permutation, and every adjacent pair left-weighted.
void validate_normal_form(const NormalForm &nf);

}  // namespace braidobf
