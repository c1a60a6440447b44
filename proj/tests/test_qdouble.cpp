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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "braidobf/rgate.hpp"

using namespace braidobf;

namespace {

// Klein four-group as an explicit table (abelian, so R collapses to swap).
const char *kV4Table =
    "group 4\n"
    "0 1 2 3\n"
    "1 0 3 2\n"
    "2 3 0 1\n"
    "3 2 1 0\n";

DitState random_state(std::shared_ptr<const GroupTable> g, int n,
                      std::mt19937_64 &rng) {
  DitState s;
  std::uniform_int_distribution<int> e(0, g->order() - 1);
  s.dits.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) s.dits.push_back(e(rng));
  s.group = std::move(g);
  return s;
}

}  // namespace

TEST_CASE("built-in group tables") {
  const GroupTable &a5 = GroupTable::a5();
  const GroupTable &s5 = GroupTable::s5();
  CHECK(a5.order() == 60);
  CHECK(s5.order() == 120);
  CHECK(a5.identity() == 0);
  CHECK(a5.element_name(0) == "()");
  // Identity is lexicographically first, so index 0 in both.
  CHECK(a5.images(0) == std::array<std::uint8_t, 5>{0, 1, 2, 3, 4});
  SUBCASE("inverses are two-sided") {
    for (int a = 0; a < a5.order(); ++a) {
      CHECK(a5.mul(a, a5.inv(a)) == 0);
      CHECK(a5.mul(a5.inv(a), a) == 0);
    }
  }
  SUBCASE("associativity, exhaustive") {
    for (int a = 0; a < 60; ++a)
      for (int b = 0; b < 60; ++b)
        for (int c = 0; c < 60; ++c)
          REQUIRE(a5.mul(a5.mul(a, b), c) == a5.mul(a, a5.mul(b, c)));
  }
}

TEST_CASE("cycle notation") {
  const GroupTable &a5 = GroupTable::a5();
  const int e = a5.element_of_cycles("(345)");
  CHECK(a5.element_name(e) == "(345)");
  CHECK(a5.inv(a5.element_of_cycles("(345)")) ==
        a5.element_of_cycles("(435)"));
  const int pair = a5.element_of_cycles("(12)(34)");
  CHECK(a5.element_name(pair) == "(12)(34)");
  CHECK(a5.mul(pair, pair) == 0);
  CHECK_THROWS_AS(a5.element_of_cycles("(12)"),
                  DomainError);  // odd, not in A5
  CHECK_THROWS_AS(a5.element_of_cycles("(16)"), FormatError);
  CHECK(GroupTable::s5().element_of_cycles("(12)") >= 0);
}

TEST_CASE("custom group tables") {
  const GroupTable v4 = GroupTable::from_table_text(kV4Table);
  CHECK(v4.order() == 4);
  CHECK(v4.inv(3) == 3);
  SUBCASE("rejects a non-associative table") {
    // Swap one entry to break the axioms.
    const char *broken =
        "group 4\n"
        "0 1 2 3\n"
        "1 0 3 2\n"
        "2 3 0 1\n"
        "3 2 1 1\n";
    CHECK_THROWS_AS(GroupTable::from_table_text(broken), DomainError);
  }
  SUBCASE("rejects malformed headers") {
    CHECK_THROWS_AS(GroupTable::from_table_text("grp 2\n0 1\n1 0\n"),
                    FormatError);
    CHECK_THROWS_AS(GroupTable::from_table_text("group 2\n0 1\n1\n"),
                    FormatError);
  }
}

TEST_CASE("r_gate and its inverse") {
  const GroupTable &a5 = GroupTable::a5();
  const int id = a5.identity();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(0, 59);
  SUBCASE("identity and self-conjugation") {
    const int a = e(rng);
    CHECK(r_gate(a5, a, id) == std::pair<int, int>{id, a});
    CHECK(r_gate(a5, a, a) == std::pair<int, int>{a, a});
    CHECK(r_gate_inv(a5, id, a) == std::pair<int, int>{a, id});
    CHECK(r_gate_inv(a5, a, a) == std::pair<int, int>{a, a});
  }
  SUBCASE("conjugating (345) by (12)(34) yields (435)") {
    const int x = a5.element_of_cycles("(345)");
    const int y = a5.element_of_cycles("(12)(34)");
    const auto [p, q] = r_gate(a5, x, y);
    CHECK(p == y);
    CHECK(q == a5.element_of_cycles("(435)"));
    CHECK(r_gate_inv(a5, p, q) == std::pair<int, int>{x, y});
  }
  SUBCASE("inverse composes to identity on all pairs, exhaustive") {
    for (int a = 0; a < 60; ++a)
      for (int b = 0; b < 60; ++b) {
        const auto [x, y] = r_gate(a5, a, b);
        REQUIRE(r_gate_inv(a5, x, y) == std::pair<int, int>{a, b});
      }
  }
}

TEST_CASE("simulate") {
  auto a5 = a5_table();
  const GroupTable &g = *a5;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(0, 59);
  SUBCASE("empty word is the identity map") {
    const DitState s = random_state(a5, 5, rng);
    CHECK(simulate(BraidWord(5, {}), s) == s);
  }
  SUBCASE("encoded swap") {
    const int a = e(rng), b = e(rng);
    DitState s{a5, {a, g.inv(a), b, g.inv(b)}};
    const DitState out = simulate(BraidWord(4, {2, 1, 3, 2}), s);
    CHECK(out.dits == std::vector<int>{b, g.inv(b), a, g.inv(a)});
  }
  SUBCASE("encoded conjugation") {
    const int a = e(rng), b = e(rng);
    DitState s{a5, {a, g.inv(a), b, g.inv(b)}};
    const DitState out = simulate(BraidWord(4, {2, 3, 3, 2}), s);
    const int conj = g.mul(g.mul(a, b), g.inv(a));
    CHECK(out.dits ==
          std::vector<int>{a, g.inv(a), conj, g.inv(conj)});
  }
  SUBCASE("homomorphism over concatenation") {
    for (int trial = 0; trial < 20; ++trial) {
      const DitState s = random_state(a5, 6, rng);
      const BraidWord w1(6, {1, -3, 5, 2});
      const BraidWord w2(6, {-2, 4, 4, -1});
      CHECK(simulate(concat(w1, w2), s) == simulate(w2, simulate(w1, s)));
    }
  }
  SUBCASE("braid relations hold under simulation") {
    for (int trial = 0; trial < 50; ++trial) {
      const DitState s = random_state(a5, 5, rng);
      CHECK(simulate(BraidWord(5, {1, 3}), s) ==
            simulate(BraidWord(5, {3, 1}), s));
      CHECK(simulate(BraidWord(5, {2, 3, 2}), s) ==
            simulate(BraidWord(5, {3, 2, 3}), s));
      CHECK(simulate(BraidWord(5, {1, -1}), s) == s);
    }
  }
  SUBCASE("dimension mismatch") {
    DitState s = random_state(a5, 3, rng);
    CHECK_THROWS_AS(simulate(BraidWord(4, {1}), s), DomainError);
  }
}

TEST_CASE("normal form preserves R-circuit functionality") {
  auto a5 = a5_table();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> n_dist(2, 7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = n_dist(rng);
    std::uniform_int_distribution<int> gen(1, n - 1);
    std::uniform_int_distribution<int> len_dist(0, 60);
    std::vector<int> letters;
    const int len = len_dist(rng);
    for (int k = 0; k < len; ++k)
      letters.push_back((rng() & 1) ? gen(rng) : -gen(rng));
    const BraidWord w(n, letters);
    const BraidWord canon = word_of(normal_form(w));
    for (int rep = 0; rep < 5; ++rep) {
      const DitState s = random_state(a5, n, rng);
      CHECK(simulate(w, s) == simulate(canon, s));
    }
  }
}

TEST_CASE("check_yang_baxter") {
  CHECK(check_yang_baxter(r_pair_gate(GroupTable::a5())));
  CHECK(check_yang_baxter(swap_gate(7)));
  CHECK(check_yang_baxter(identity_gate(4)));
  SUBCASE("a non-solution") {
    // (a, b) -> (a, a+b) over Z2 fails on the triple (1, 0, 0).
    PairGate g;
    g.d = 2;
    g.map = {0, 1, 3, 2};  // (0,0)->(0,0) (0,1)->(0,1) (1,0)->(1,1) (1,1)->(1,0)
    CHECK_FALSE(check_yang_baxter(g));
  }
  SUBCASE("R over an abelian group is the swap") {
    const GroupTable v4 = GroupTable::from_table_text(kV4Table);
    CHECK(r_pair_gate(v4) == swap_gate(4));
    CHECK(check_yang_baxter(r_pair_gate(v4)));
  }
}

TEST_CASE("gate_order") {
  CHECK(gate_order(identity_gate(5)) == 1);
  CHECK(gate_order(swap_gate(9)) == 2);
  const GroupTable v4 = GroupTable::from_table_text(kV4Table);
  CHECK(gate_order(r_pair_gate(v4)) == 2);
  CHECK(gate_order(r_pair_gate(GroupTable::a5())) == 60);
}

TEST_CASE("generated_subgroup") {
  const GroupTable &a5 = GroupTable::a5();
  CHECK(generated_subgroup(a5, {a5.identity()}) ==
        std::vector<int>{a5.identity()});
  const int five_cycle = a5.element_of_cycles("(12345)");
  CHECK(generated_subgroup(a5, {five_cycle}).size() == 5);
  CHECK(generated_subgroup(a5, appendix_seed_elements(a5)).size() == 60);
}

TEST_CASE("orbit_under_r") {
  const GroupTable &a5 = GroupTable::a5();
  SUBCASE("identity seed") {
    CHECK(orbit_under_r(a5, {a5.identity()}) ==
          std::vector<int>{a5.identity()});
  }
  const std::vector<int> seed = appendix_seed_elements(a5);
  const std::vector<int> orbit = orbit_under_r(a5, seed);
  SUBCASE("orbit size and excluded classes") {
    CHECK(orbit.size() == 44);
    const std::set<int> members(orbit.begin(), orbit.end());
    CHECK_FALSE(members.count(a5.identity()));
    CHECK_FALSE(members.count(a5.element_of_cycles("(12)(34)")));
  }
  SUBCASE("class breakdown is 20 + 12 + 12") {
    std::set<int> remaining(orbit.begin(), orbit.end());
    std::vector<std::size_t> sizes;
    while (!remaining.empty()) {
      const std::vector<int> cls = a5.conjugacy_class(*remaining.begin());
      sizes.push_back(cls.size());
      for (const int x : cls) {
        REQUIRE(remaining.count(x));  // classes lie wholly inside the orbit
        remaining.erase(x);
      }
    }
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{12, 12, 20});
  }
  SUBCASE("the two five-cycle constants are non-conjugate") {
    const auto c1 = a5.conjugacy_class(a5.element_of_cycles("(14352)"));
    const std::set<int> s1(c1.begin(), c1.end());
    CHECK_FALSE(s1.count(a5.element_of_cycles("(15342)")));
  }
}

TEST_CASE("restrict_gate") {
  const GroupTable &a5 = GroupTable::a5();
  const PairGate r = r_pair_gate(a5);
  SUBCASE("restriction to the full group changes nothing") {
    std::vector<int> all(60);
    for (int i = 0; i < 60; ++i) all[i] = i;
    CHECK(restrict_gate(r, all) == r);
  }
  SUBCASE("restriction to the 44-orbit is closed and satisfies YBE") {
    const std::vector<int> orbit =
        orbit_under_r(a5, appendix_seed_elements(a5));
    const PairGate small = restrict_gate(r, orbit);
    CHECK(small.d == 44);
    CHECK(check_yang_baxter(small));
  }
  SUBCASE("non-closed subsets are rejected") {
    CHECK_THROWS_AS(
        restrict_gate(r, {a5.element_of_cycles("(345)"),
                          a5.element_of_cycles("(12)(34)")}),
        DomainError);
  }
}

TEST_CASE("ybe_search at d = 2") {
  const std::vector<PairGate> found = ybe_search(2);
  const std::set<std::vector<std::int32_t>> maps = [&] {
    std::set<std::vector<std::int32_t>> s;
    for (const PairGate &g : found) s.insert(g.map);
    return s;
  }();
  CHECK(maps.size() == found.size());
  CHECK(maps.count(identity_gate(2).map));
  CHECK(maps.count(swap_gate(2).map));
  SUBCASE("closed under gate inversion") {
    for (const PairGate &g : found) CHECK(maps.count(inverse_gate(g).map));
  }
  SUBCASE("agrees with an independent re-enumeration") {
    // Oracle: walk all 24 bijections of the four pairs and test the two
    // sides of the relation on every triple directly.
    std::vector<int> perm{0, 1, 2, 3};
    std::size_t count = 0;
    do {
      auto ap = [&perm](int a, int b) {
        const int t = perm[a * 2 + b];
        return std::pair<int, int>{t / 2, t % 2};
      };
      bool ok = true;
      for (int a = 0; a < 2 && ok; ++a)
        for (int b = 0; b < 2 && ok; ++b)
          for (int c = 0; c < 2 && ok; ++c) {
            auto [a1, b1] = ap(a, b);
            auto [b2, c1] = ap(b1, c);
            auto [a2, b3] = ap(a1, b2);
            auto [bb1, cc1] = ap(b, c);
            auto [aa1, bb2] = ap(a, bb1);
            auto [bb3, cc2] = ap(bb2, cc1);
            if (!(a2 == aa1 && b3 == bb3 && c1 == cc2)) ok = false;
          }
      if (ok) {
        ++count;
        std::vector<std::int32_t> m(perm.begin(), perm.end());
        CHECK(maps.count(m));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count == found.size());
  }
  CHECK_THROWS_AS(ybe_search(4), DomainError);
}
