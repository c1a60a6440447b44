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

#include "braidobf/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <cctype>
#include <sstream>

namespace braidobf {

namespace {

using Images5 = std::array<std::uint8_t, 5>;

int parity(const Images5 &img) {
  int inv = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (img[i] > img[j]) ++inv;
  return inv % 2;
}

Images5 compose5(const Images5 &a, const Images5 &b) {
  Images5 out;
  for (int x = 0; x < 5; ++x) out[x] = a[b[x]];
  return out;
}

std::vector<Images5> all_perms5(bool even_only) {
  Images5 p{0, 1, 2, 3, 4};
  std::vector<Images5> out;
  do {
    if (!even_only || parity(p) == 0) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

GroupTable GroupTable::from_permutations(std::string name,
                                         std::vector<Images5> elems) {
  GroupTable g;
  g.name_ = std::move(name);
  g.order_ = static_cast<int>(elems.size());
  g.images_ = std::move(elems);
  std::map<Images5, int> index;
  for (int i = 0; i < g.order_; ++i) index[g.images_[i]] = i;
  g.mul_.resize(static_cast<std::size_t>(g.order_) * g.order_);
  g.inv_.resize(static_cast<std::size_t>(g.order_));
  for (int a = 0; a < g.order_; ++a) {
    for (int b = 0; b < g.order_; ++b) {
      const Images5 prod = compose5(g.images_[a], g.images_[b]);
      const int idx = index.at(prod);
      g.mul_[a * g.order_ + b] = static_cast<std::uint16_t>(idx);
      if (idx == 0) g.inv_[a] = static_cast<std::uint16_t>(b);
    }
  }
  return g;
}

const GroupTable &GroupTable::a5() {
  static const GroupTable g = from_permutations("a5", all_perms5(true));
  return g;
}

const GroupTable &GroupTable::s5() {
  static const GroupTable g = from_permutations("s5", all_perms5(false));
  return g;
}

GroupTable GroupTable::from_table_text(const std::string &text) {
  std::istringstream in(text);
  // Strip '#' comments line-wise, then tokenize.
  std::string line, stripped;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    stripped += line.substr(0, hash);
    stripped += '\n';
  }
  std::istringstream tok(stripped);
  std::string header;
  int d = 0;
  if (!(tok >> header >> d) || header != "group")
    throw FormatError("group table: expected header 'group <d>'");
  if (d < 1) throw FormatError("group table: order must be >= 1");
  if (d > 256)
    throw FormatError("group table: order above verification limit of 256");
  GroupTable g;
  g.name_ = "custom";
  g.order_ = d;
  g.mul_.resize(static_cast<std::size_t>(d) * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      int v = -1;
      if (!(tok >> v))
        throw FormatError("group table: expected " + std::to_string(d * d) +
                          " product entries");
      if (v < 0 || v >= d)
        throw FormatError("group table: product index out of range");
      g.mul_[a * d + b] = static_cast<std::uint16_t>(v);
    }
  }
  std::string extra;
  if (tok >> extra) throw FormatError("group table: trailing tokens");
  g.inv_.assign(static_cast<std::size_t>(d), 0);
  g.check_axioms();
  return g;
}

void GroupTable::check_axioms() {
  const int d = order_;
  for (int a = 0; a < d; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw DomainError("group table: element 0 is not a two-sided identity");
  for (int a = 0; a < d; ++a) {
    int left = -1;
    for (int b = 0; b < d; ++b)
      if (mul(a, b) == 0) {
        if (mul(b, a) != 0)
          throw DomainError("group table: one-sided inverse for element " +
                            std::to_string(a));
        left = b;
      }
    if (left < 0)
      throw DomainError("group table: element " + std::to_string(a) +
                        " has no inverse");
    inv_[a] = static_cast<std::uint16_t>(left);
  }
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw DomainError("group table: associativity fails at (" +
                            std::to_string(a) + "," + std::to_string(b) +
                            "," + std::to_string(c) + ")");
}

int GroupTable::conj(int a, int b) const { return mul(mul(inv(b), a), b); }

int GroupTable::element_of_cycles(const std::string &cycles) const {
  if (!has_images())
    throw DomainError("cycle notation requires a built-in group");
  Images5 img{0, 1, 2, 3, 4};
  std::size_t pos = 0;
  bool any = false;
  while (pos < cycles.size()) {
    if (std::isspace(static_cast<unsigned char>(cycles[pos]))) {
      ++pos;
      continue;
    }
    if (cycles[pos] != '(')
      throw FormatError("cycle notation: expected '('");
    const std::size_t close = cycles.find(')', pos);
    if (close == std::string::npos)
      throw FormatError("cycle notation: missing ')'");
    std::vector<int> cyc;
    for (std::size_t k = pos + 1; k < close; ++k) {
      const char c = cycles[k];
      if (c < '1' || c > '5')
        throw FormatError("cycle notation: symbols must be 1..5");
      cyc.push_back(c - '1');
    }
    std::set<int> dedup(cyc.begin(), cyc.end());
    if (dedup.size() != cyc.size())
      throw FormatError("cycle notation: repeated symbol in a cycle");
    // Compose this cycle on top of what we have (cycles in one expression
    // are disjoint in all uses here, so order does not matter).
    Images5 cperm{0, 1, 2, 3, 4};
    for (std::size_t k = 0; k + 1 < cyc.size(); ++k)
      cperm[cyc[k]] = static_cast<std::uint8_t>(cyc[k + 1]);
    if (!cyc.empty()) cperm[cyc.back()] = static_cast<std::uint8_t>(cyc[0]);
    img = compose5(cperm, img);
    pos = close + 1;
    any = true;
  }
  if (!any) throw FormatError("cycle notation: empty expression");
  for (int i = 0; i < order_; ++i)
    if (images_[i] == img) return i;
  throw DomainError("cycle element does not belong to group " + name_);
}

std::string GroupTable::element_name(int a) const {
  if (!has_images()) return "e" + std::to_string(a);
  if (a == 0) return "()";
  const Images5 &img = images_[a];
  std::string out;
  std::array<bool, 5> seen{};
  for (int start = 0; start < 5; ++start) {
    if (seen[start] || img[start] == start) continue;
    out += '(';
    int x = start;
    do {
      seen[x] = true;
      out += static_cast<char>('1' + x);
      x = img[x];
    } while (x != start);
    out += ')';
  }
  return out;
}

std::vector<int> GroupTable::conjugacy_class(int a) const {
  std::set<int> cls;
  for (int b = 0; b < order_; ++b) cls.insert(conj(a, b));
  return {cls.begin(), cls.end()};
}

const std::array<const char *, 4> kCatalystCycles = {"(14352)", "(15342)",
                                                     "(124)", "(521)"};
const char *const kEncodedZeroCycle = "(345)";
const char *const kEncodedOneCycle = "(435)";

std::vector<int> appendix_seed_elements(const GroupTable &g) {
  std::set<int> seed;
  for (const char *cyc : kCatalystCycles) {
    const int e = g.element_of_cycles(cyc);
    seed.insert(e);
    seed.insert(g.inv(e));
  }
  for (const char *cyc : {kEncodedZeroCycle, kEncodedOneCycle}) {
    const int e = g.element_of_cycles(cyc);
    seed.insert(e);
    seed.insert(g.inv(e));
  }
  return {seed.begin(), seed.end()};
}

}  // namespace braidobf
