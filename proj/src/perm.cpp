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

#include "braidobf/perm.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace braidobf {

namespace {
constexpr int kMaxDegree = 64;  // descent sets live in a 64-bit mask

void check_degree(int n) {
  if (n < 1) throw DomainError("permutation degree must be >= 1");
  if (n > kMaxDegree)
    throw DomainError("permutation degree above supported limit of 64");
}
}  // namespace

Perm Perm::identity(int n) {
  check_degree(n);
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  return Perm(std::move(img));
}

Perm Perm::transposition(int n, int i) {
  check_degree(n);
  if (i < 1 || i >= n)
    throw DomainError("transposition index out of range 1..n-1");
  Perm p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Perm Perm::longest(int n) {
  check_degree(n);
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(n - 1 - i);
  return Perm(std::move(img));
}

Perm Perm::from_images(const std::vector<int> &images) {
  const int n = static_cast<int>(images.size());
  check_degree(n);
  std::vector<std::uint8_t> img(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > n || seen[v - 1])
      throw DomainError("images do not form a bijection on {1..n}");
    seen[v - 1] = true;
    img[i] = static_cast<std::uint8_t>(v - 1);
  }
  return Perm(std::move(img));
}

std::vector<int> Perm::images() const {
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    inv[img_[i]] = static_cast<std::uint8_t>(i);
  return Perm(std::move(inv));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Perm::inversions() const {
  const int n = degree();
  int count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (img_[i] > img_[j]) ++count;
  return count;
}

std::uint64_t Perm::left_descent_mask() const {
  const int n = degree();
  std::uint8_t pos[kMaxDegree];
  for (int i = 0; i < n; ++i) pos[img_[i]] = static_cast<std::uint8_t>(i);
  std::uint64_t mask = 0;
  for (int i = 0; i + 1 < n; ++i)
    if (pos[i] > pos[i + 1]) mask |= std::uint64_t{1} << i;
  return mask;
}

std::uint64_t Perm::right_descent_mask() const {
  const int n = degree();
  std::uint64_t mask = 0;
  for (int i = 0; i + 1 < n; ++i)
    if (img_[i] > img_[i + 1]) mask |= std::uint64_t{1} << i;
  return mask;
}

void Perm::append_transposition(int i) { std::swap(img_[i - 1], img_[i]); }

void Perm::prepend_transposition(int i) {
  // Swap the positions holding values i-1 and i (0-based).
  int a = -1, b = -1;
  for (int p = 0; p < degree(); ++p) {
    if (img_[p] == i - 1) a = p;
    if (img_[p] == i) b = p;
  }
  std::swap(img_[a], img_[b]);
}

Perm compose(const Perm &f, const Perm &g) {
  if (f.degree() != g.degree())
    throw DomainError("strand-count mismatch in permutation composition");
  const int n = f.degree();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) out[x - 1] = f.image(g.image(x));
  return Perm::from_images(out);
}

std::vector<int> descents(const Perm &f, Side side) {
  const std::uint64_t mask =
      side == Side::left ? f.left_descent_mask() : f.right_descent_mask();
  std::vector<int> out;
  for (int i = 1; i < f.degree(); ++i)
    if (mask >> (i - 1) & 1) out.push_back(i);
  return out;
}

Perm delta_perm(int n) { return Perm::longest(n); }

Perm tau(const Perm &f) {
  const Perm w0 = Perm::longest(f.degree());
  return compose(compose(w0, f), w0);
}

std::vector<int> simple_to_word(const Perm &f) {
  const int n = f.degree();
  std::vector<int> img = f.images();
  std::vector<int> trace;
  trace.reserve(static_cast<std::size_t>(f.inversions()));
  for (int v = n; v >= 2; --v) {
    int p = 0;
    while (img[p] != v) ++p;
    for (int q = p; q + 1 <= v - 1; ++q) {
      std::swap(img[q], img[q + 1]);
      trace.push_back(q + 1);  // emitted 1-based generator index
    }
  }
  // Each recorded swap strips the last letter of the word, so the word
  // reads the trace back to front.
  std::reverse(trace.begin(), trace.end());
  return trace;
}

}  // namespace braidobf
