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

#include "braidobf/rgate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace braidobf {

std::shared_ptr<const GroupTable> a5_table() {
  return {std::shared_ptr<const GroupTable>{}, &GroupTable::a5()};
}

std::shared_ptr<const GroupTable> s5_table() {
  return {std::shared_ptr<const GroupTable>{}, &GroupTable::s5()};
}

std::pair<int, int> r_gate(const GroupTable &g, int a, int b) {
  return {b, g.conj(a, b)};
}

std::pair<int, int> r_gate_inv(const GroupTable &g, int x, int y) {
  return {g.mul(g.mul(x, y), g.inv(x)), x};
}

void simulate_inplace(const BraidWord &w, const GroupTable &g,
                      std::vector<int> &dits) {
  if (static_cast<int>(dits.size()) != w.n)
    throw DomainError("simulate: state size differs from strand count");
  for (const int letter : w.letters) {
    const int i = std::abs(letter) - 1;
    int &a = dits[i];
    int &b = dits[i + 1];
    if (letter > 0) {
      const int nb = g.conj(a, b);
      a = b;
      b = nb;
    } else {
      const int na = g.mul(g.mul(a, b), g.inv(a));
      b = a;
      a = na;
    }
  }
}

DitState simulate(const BraidWord &w, const DitState &s) {
  DitState out = s;
  simulate_inplace(w, *s.group, out.dits);
  return out;
}

PairGate identity_gate(int d) {
  PairGate g;
  g.d = d;
  g.map.resize(static_cast<std::size_t>(d) * d);
  std::iota(g.map.begin(), g.map.end(), 0);
  return g;
}

PairGate swap_gate(int d) {
  PairGate g;
  g.d = d;
  g.map.resize(static_cast<std::size_t>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) g.map[a * d + b] = b * d + a;
  return g;
}

PairGate inverse_gate(const PairGate &g) {
  PairGate out;
  out.d = g.d;
  out.map.resize(g.map.size());
  for (std::size_t p = 0; p < g.map.size(); ++p)
    out.map[g.map[p]] = static_cast<std::int32_t>(p);
  return out;
}

PairGate r_pair_gate(const GroupTable &g) {
  PairGate out;
  out.d = g.order();
  out.map.resize(static_cast<std::size_t>(out.d) * out.d);
  for (int a = 0; a < out.d; ++a)
    for (int b = 0; b < out.d; ++b)
      out.map[a * out.d + b] = b * out.d + g.conj(a, b);
  return out;
}

namespace {

// Apply g to positions (0,1) or (1,2) of a triple encoded as a*d^2+b*d+c.
inline int apply_front(const PairGate &g, int d, int t) {
  const int c = t % d;
  const std::int32_t ab = g.map[t / d];
  return ab * d + c;
}

inline int apply_back(const PairGate &g, int d, int t) {
  const int a = t / (d * d);
  const std::int32_t bc = g.map[t % (d * d)];
  return a * d * d + bc;
}

}  // namespace

bool check_yang_baxter(const PairGate &g) {
  const int d = g.d;
  const int total = d * d * d;
  for (int t = 0; t < total; ++t) {
    const int lhs = apply_front(g, d, apply_back(g, d, apply_front(g, d, t)));
    const int rhs = apply_back(g, d, apply_front(g, d, apply_back(g, d, t)));
    if (lhs != rhs) return false;
  }
  return true;
}

unsigned long long gate_order(const PairGate &g) {
  const std::size_t points = g.map.size();
  std::vector<bool> seen(points, false);
  unsigned long long order = 1;
  for (std::size_t s = 0; s < points; ++s) {
    if (seen[s]) continue;
    unsigned long long len = 0;
    std::size_t x = s;
    do {
      seen[x] = true;
      x = static_cast<std::size_t>(g.map[x]);
      ++len;
    } while (x != s);
    order = std::lcm(order, len);
  }
  return order;
}

std::vector<int> generated_subgroup(const GroupTable &g,
                                    const std::vector<int> &gens) {
  for (const int e : gens)
    if (e < 0 || e >= g.order())
      throw DomainError("generator index out of range");
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<int> frontier{g.identity()};
  seen[g.identity()] = true;
  std::vector<int> closure_gens = gens;
  for (const int e : gens) closure_gens.push_back(g.inv(e));
  while (!frontier.empty()) {
    std::vector<int> next;
    for (const int x : frontier)
      for (const int e : closure_gens) {
        const int y = g.mul(x, e);
        if (!seen[y]) {
          seen[y] = true;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::vector<int> out;
  for (int i = 0; i < g.order(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

std::vector<int> orbit_under_r(const GroupTable &g,
                               const std::vector<int> &seed) {
  const std::vector<int> subgroup = generated_subgroup(g, seed);
  std::set<int> orbit;
  for (const int a : seed)
    for (const int b : subgroup) orbit.insert(g.conj(a, b));
  return {orbit.begin(), orbit.end()};
}

PairGate restrict_gate(const PairGate &g, const std::vector<int> &orbit) {
  const int d = g.d;
  const int k = static_cast<int>(orbit.size());
  std::vector<int> local(static_cast<std::size_t>(d), -1);
  for (int i = 0; i < k; ++i) {
    if (orbit[i] < 0 || orbit[i] >= d)
      throw DomainError("restrict_gate: orbit element out of range");
    local[orbit[i]] = i;
  }
  PairGate out;
  out.d = k;
  out.map.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const auto [x, y] = g.apply(orbit[i], orbit[j]);
      if (local[x] < 0 || local[y] < 0)
        throw DomainError(
            "restrict_gate: orbit is not closed under the gate");
      out.map[i * k + j] = local[x] * k + local[y];
    }
  return out;
}

std::vector<PairGate> ybe_search(int d) {
  if (d < 2 || d > 3)
    throw DomainError("ybe_search supports dit dimension 2 or 3 only");
  const int points = d * d;
  std::vector<std::int32_t> perm(static_cast<std::size_t>(points));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<PairGate> found;
  do {
    PairGate g{d, perm};
    if (check_yang_baxter(g)) found.push_back(std::move(g));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

}  // namespace braidobf
