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

#include "braidobf/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "braidobf/attacks.hpp"

namespace braidobf {

namespace {

// ---------------------------------------------------------------------
// Shared helpers. Seeds are fixed constants so the suite is reproducible.
// ---------------------------------------------------------------------

constexpr std::uint64_t kCorpusSeed = 0x9e3779b97f4a7c15ull;

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string &msg) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
  void require(bool cond, const std::string &msg) {
    if (!cond) fail(msg);
  }
};

BraidWord random_word(std::mt19937_64 &rng, int max_n, int max_len) {
  std::uniform_int_distribution<int> n_dist(2, max_n);
  const int n = n_dist(rng);
  std::uniform_int_distribution<int> len_dist(0, max_len);
  const int len = len_dist(rng);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(len));
  for (int k = 0; k < len; ++k)
    letters.push_back((rng() & 1) ? gen(rng) : -gen(rng));
  return BraidWord(n, std::move(letters));
}

BraidWord random_rewrite(const BraidWord &w, std::mt19937_64 &rng) {
  std::vector<int> L = w.letters;
  const int n = w.n;
  std::uniform_int_distribution<int> kind_dist(0, 3);
  for (int attempt = 0; attempt < 20; ++attempt) {
    const int kind = kind_dist(rng);
    if (kind == 0 && L.size() >= 2) {
      std::uniform_int_distribution<std::size_t> pos(0, L.size() - 2);
      const std::size_t p = pos(rng);
      if (std::abs(std::abs(L[p]) - std::abs(L[p + 1])) >= 2) {
        std::swap(L[p], L[p + 1]);
        return BraidWord(n, std::move(L));
      }
    } else if (kind == 1 && L.size() >= 3) {
      std::uniform_int_distribution<std::size_t> pos(0, L.size() - 3);
      const std::size_t p = pos(rng);
      const int a = L[p], b = L[p + 1], c = L[p + 2];
      const bool same_sign = (a > 0) == (b > 0) && (b > 0) == (c > 0);
      if (same_sign && a == c && std::abs(std::abs(a) - std::abs(b)) == 1) {
        L[p] = b;
        L[p + 1] = a;
        L[p + 2] = b;
        return BraidWord(n, std::move(L));
      }
    } else if (kind == 2) {
      std::uniform_int_distribution<std::size_t> pos(0, L.size());
      std::uniform_int_distribution<int> gen(1, n - 1);
      const std::size_t p = pos(rng);
      const int i = gen(rng);
      const int sign = (rng() & 1) ? 1 : -1;
      L.insert(L.begin() + static_cast<std::ptrdiff_t>(p),
               {sign * i, -sign * i});
      return BraidWord(n, std::move(L));
    } else if (kind == 3 && L.size() >= 2) {
      std::uniform_int_distribution<std::size_t> pos(0, L.size() - 2);
      const std::size_t p = pos(rng);
      if (L[p] == -L[p + 1]) {
        L.erase(L.begin() + static_cast<std::ptrdiff_t>(p),
                L.begin() + static_cast<std::ptrdiff_t>(p) + 2);
        return BraidWord(n, std::move(L));
      }
    }
  }
  return w;
}

std::vector<int> random_bits_state(int n, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> e(0, 59);
  std::vector<int> dits(static_cast<std::size_t>(n));
  for (int &d : dits) d = e(rng);
  return dits;
}

ToffoliCircuit random_circuit(int wires, int gate_count,
                              std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> wire(1, wires);
  std::vector<ToffoliGate> gates;
  while (static_cast<int>(gates.size()) < gate_count) {
    const int a = wire(rng), b = wire(rng), t = wire(rng);
    if (a == b || t == a || t == b) continue;
    gates.emplace_back(a, b, t);
  }
  return ToffoliCircuit(wires, std::move(gates));
}

// The reference braid for the canonical Toffoli placement, in product
// order (rightmost acts first).
const std::vector<int> kReferenceProductOrder = {
    8,   9,   9,   8,   10,  11,  9,   10,  10,  11,  11,  10,  10,  11,
    9,   10,  2,   3,   1,   2,   4,   5,   3,   4,   6,   7,   5,   6,
    8,   9,   9,   8,   6,   7,   5,   6,   4,   5,   3,   4,   2,   3,
    1,   2,   12,  13,  11,  12,  10,  11,  9,   10,  10,  11,  11,  10,
    10,  11,  9,   10,  12,  13,  11,  12,  6,   7,   5,   6,   8,   9,
    9,   8,   6,   7,   5,   6,   10,  11,  9,   10,  -10, -11, -11, -10,
    10,  11,  9,   10,  4,   5,   3,   4,   6,   7,   5,   6,   8,   9,
    9,   8,   6,   7,   5,   6,   4,   5,   3,   4,   12,  13,  11,  12,
    10,  11,  9,   10,  -10, -11, -11, -10, 10,  11,  9,   10,  12,  13,
    11,  12,  8,   9,   9,   8};

// The fixed per-instance corpus shared by criteria 7 and 12.
std::vector<BraidWord> property_corpus() {
  std::mt19937_64 rng(kCorpusSeed);
  std::vector<BraidWord> corpus;
  corpus.reserve(1000);
  for (int k = 0; k < 1000; ++k) corpus.push_back(random_word(rng, 10, 300));
  return corpus;
}

// Instances shared by criteria 9 and 10.
struct AttackInstance {
  ToffoliCircuit circuit;
  std::uint64_t seed;
};

std::vector<AttackInstance> attack_instances() {
  std::mt19937_64 rng(0xA77AC55EEDull);
  std::vector<AttackInstance> out;
  for (int k = 0; k < 50; ++k) {
    const int w = (k % 2) ? 4 : 3;
    const int gates = 1 + static_cast<int>(rng() % 4);
    out.push_back({random_circuit(w, gates, rng), rng()});
  }
  return out;
}

// ---------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------

Check criterion_yang_baxter() {
  Check c;
  const PairGate r = r_pair_gate(GroupTable::a5());
  c.require(check_yang_baxter(r), "R over A5 violates the relation");
  c.detail = "216000 triples checked";
  return c;
}

Check criterion_gate_order() {
  Check c;
  const unsigned long long order = gate_order(r_pair_gate(GroupTable::a5()));
  c.require(order == 60, "order is " + std::to_string(order));
  if (c.ok) c.detail = "order(R) = 60";
  return c;
}

Check criterion_orbit() {
  Check c;
  const GroupTable &a5 = GroupTable::a5();
  const std::vector<int> seed = appendix_seed_elements(a5);
  const std::vector<int> subgroup = generated_subgroup(a5, seed);
  c.require(subgroup.size() == 60,
            "generated subgroup has " + std::to_string(subgroup.size()) +
                " elements");
  const std::vector<int> orbit = orbit_under_r(a5, seed);
  c.require(orbit.size() == 44,
            "orbit has " + std::to_string(orbit.size()) + " elements");
  const std::set<int> members(orbit.begin(), orbit.end());
  c.require(!members.count(a5.identity()), "orbit contains the identity");
  c.require(!members.count(a5.element_of_cycles("(12)(34)")),
            "orbit contains the (12)(34) class");
  std::multiset<std::size_t> sizes;
  std::set<int> remaining = members;
  while (!remaining.empty()) {
    const std::vector<int> cls = a5.conjugacy_class(*remaining.begin());
    sizes.insert(cls.size());
    for (const int x : cls) remaining.erase(x);
  }
  c.require(sizes == std::multiset<std::size_t>{12, 12, 20},
            "conjugacy class sizes are not 20+12+12");
  try {
    const PairGate small = restrict_gate(r_pair_gate(a5), orbit);
    c.require(small.d == 44, "restricted gate dimension");
    c.require(check_yang_baxter(small),
              "restricted gate violates the relation");
  } catch (const DomainError &e) {
    c.fail(std::string("restriction failed: ") + e.what());
  }
  if (c.ok) c.detail = "|<S>|=60, |orbit|=44, classes 20+12+12, YBE on 44^3";
  return c;
}

Check criterion_golden_toffoli() {
  Check c;
  const Layout layout(3);
  const BraidWord compiled = compile_toffoli(ToffoliGate(2, 3, 1), layout);
  c.require(compiled.n == 14, "strand count != 14");
  c.require(compiled.size() == 132,
            "letter count " + std::to_string(compiled.size()) + " != 132");
  std::vector<int> time_order(kReferenceProductOrder.rbegin(),
                              kReferenceProductOrder.rend());
  const NormalForm reference = normal_form(BraidWord(14, time_order));
  const NormalForm nf = normal_form(compiled);
  c.require(nf == reference, "normal form differs from the reference braid");
  c.require(nf.m == 0, "infimum != 0");
  c.require(nf.factor_count() == 14, "factor count != 14");
  if (c.ok) c.detail = "132 letters on 14 strands, NF matches, m=0, p=14";
  return c;
}

Check criterion_toffoli_semantics() {
  Check c;
  auto a5 = a5_table();
  const GroupTable &g = *a5;
  // Orbit membership for the confinement check.
  std::vector<char> in_orbit(60, 0);
  for (const int x : orbit_under_r(g, appendix_seed_elements(g)))
    in_orbit[x] = 1;
  long long states = 0;
  for (int w = 3; w <= 5 && c.ok; ++w) {
    const Layout layout(w);
    for (const ToffoliGate &gate : all_placements(w)) {
      const BraidWord braid = compile_toffoli(gate, layout);
      for (unsigned mask = 0; mask < (1u << w); ++mask) {
        std::vector<int> bits(static_cast<std::size_t>(w));
        for (int k = 0; k < w; ++k) bits[k] = (mask >> k) & 1;
        DitState s = layout.encoded_state(bits, a5);
        bool confined = true;
        for (const int letter : braid.letters) {
          const int i = std::abs(letter) - 1;
          int &x = s.dits[i];
          int &y = s.dits[i + 1];
          if (letter > 0) {
            const int ny = g.conj(x, y);
            x = y;
            y = ny;
          } else {
            const int nx = g.mul(g.mul(x, y), g.inv(x));
            y = x;
            x = nx;
          }
          if (!in_orbit[s.dits[i]] || !in_orbit[s.dits[i + 1]])
            confined = false;
        }
        const auto decoded = layout.decode_state(s);
        std::vector<int> expected = bits;
        expected[gate.t - 1] ^= bits[gate.c1 - 1] & bits[gate.c2 - 1];
        if (!decoded || *decoded != expected) {
          c.fail("wrong table at w=" + std::to_string(w));
          break;
        }
        if (!confined) {
          c.fail("dit value left the 44-orbit at w=" + std::to_string(w));
          break;
        }
        ++states;
      }
      if (!c.ok) break;
    }
  }
  if (c.ok)
    c.detail = std::to_string(states) +
               " encoded runs, catalysts restored, orbit-confined";
  return c;
}

Check criterion_factor_stability() {
  Check c;
  for (int w = 3; w <= 5 && c.ok; ++w) {
    const Layout layout(w);
    std::vector<NormalForm> nfs;
    for (const ToffoliGate &gate : all_placements(w))
      nfs.push_back(normal_form(compile_toffoli(gate, layout)));
    for (const NormalForm &nf : nfs) {
      c.require(nf.m == 0, "nonzero infimum at w=" + std::to_string(w));
      c.require(nf.factor_count() == 14,
                "factor count != 14 at w=" + std::to_string(w));
    }
    if (!c.ok) break;
    for (std::size_t k = 1; k < nfs.size(); ++k) {
      for (int j = 2; j <= 8; ++j)
        c.require(nfs[k].factors[j - 1] == nfs[0].factors[j - 1],
                  "factor " + std::to_string(j) + " varies at w=" +
                      std::to_string(w));
      for (int j = 10; j <= 12; ++j)
        c.require(nfs[k].factors[j - 1] == nfs[0].factors[j - 1],
                  "factor " + std::to_string(j) + " varies at w=" +
                      std::to_string(w));
    }
  }
  if (c.ok) c.detail = "45 placements over w=3,4,5; factors 2-8,10-12 fixed";
  return c;
}

Check criterion_nf_properties() {
  Check c;
  std::mt19937_64 rng(kCorpusSeed + 1);
  const std::vector<BraidWord> corpus = property_corpus();
  int failures = 0;
  for (const BraidWord &w : corpus) {
    const NormalForm nf = normal_form(w);
    // Normality and factor sanity.
    try {
      validate_normal_form(nf);
    } catch (const DomainError &) {
      ++failures;
      continue;
    }
    // Exponent-sum identity.
    const long long half = static_cast<long long>(nf.n) * (nf.n - 1) / 2;
    long long inv_total = 0;
    for (const Perm &f : nf.factors) inv_total += f.inversions();
    if (w.exponent_sum() != nf.m * half + inv_total) {
      ++failures;
      continue;
    }
    // Projection consistency.
    Perm proj =
        (nf.m % 2 != 0) ? Perm::longest(nf.n) : Perm::identity(nf.n);
    for (const Perm &f : nf.factors) proj = compose(proj, f);
    if (!(permutation_image(w) == proj)) {
      ++failures;
      continue;
    }
    // Round trip.
    if (!(normal_form(word_of(nf)) == nf)) {
      ++failures;
      continue;
    }
    // w . w^-1 is trivial.
    if (!normal_form(concat(w, invert(w))).is_trivial()) {
      ++failures;
      continue;
    }
    // Rewrite invariance.
    BraidWord rewritten = w;
    for (int k = 0; k < 30; ++k) rewritten = random_rewrite(rewritten, rng);
    if (!(normal_form(rewritten) == nf)) ++failures;
  }
  c.require(failures == 0, std::to_string(failures) + " corpus failures");
  if (c.ok) c.detail = "1000 random words (n<=10, len<=300), zero failures";
  return c;
}

Check criterion_def2() {
  Check c;
  auto a5 = a5_table();
  std::mt19937_64 rng(kCorpusSeed + 2);
  int sim_checks = 0;
  for (int inst = 0; inst < 60 && c.ok; ++inst) {
    const BraidWord w = random_word(rng, 8, 80);
    const ObfuscationResult r = obfuscate_rcircuit(w);
    // Property (1): strong equivalence, sampled.
    for (int rep = 0; rep < 100; ++rep) {
      DitState s{a5, random_bits_state(w.n, rng)};
      std::vector<int> expect = s.dits;
      simulate_inplace(w, *a5, expect);
      std::vector<int> got = s.dits;
      simulate_inplace(r.word, *a5, got);
      if (expect != got) {
        c.fail("simulation mismatch at instance " + std::to_string(inst));
        break;
      }
      ++sim_checks;
    }
    // Property (3): metamorphic rewriting, bit-identical output.
    BraidWord rewritten = w;
    for (int k = 0; k < 50; ++k) rewritten = random_rewrite(rewritten, rng);
    const ObfuscationResult r2 = obfuscate_rcircuit(rewritten);
    if (!(r2.nf == r.nf) || !(r2.word == r.word))
      c.fail("rewrite changed the output at instance " +
             std::to_string(inst));
  }
  if (c.ok)
    c.detail = "60 instances, " + std::to_string(sim_checks) +
               " state checks, 50-rewrite fuzzing";
  return c;
}

Check criterion_peeling() {
  Check c;
  const std::vector<AttackInstance> instances = attack_instances();
  int recovered = 0;
  int correct_strips = 0;
  for (const AttackInstance &inst : instances) {
    const Layout layout(inst.circuit.wires);
    const ObfuscationResult obf =
        obfuscate_circuit(inst.circuit, ObfMode::naive);
    // Provable direction, hard assertion: stripping the true last gate of
    // the residual circuit always leaves a positive braid.
    NormalForm residual = obf.nf;
    for (auto it = inst.circuit.gates.rbegin();
         it != inst.circuit.gates.rend(); ++it) {
      residual = strip_gate(residual, *it, layout);
      if (residual.m < 0) {
        c.fail("true-gate strip went negative");
        break;
      }
      ++correct_strips;
    }
    if (!c.ok) break;
    if (!residual.is_trivial()) {
      c.fail("stripping the full circuit did not reach the identity");
      break;
    }
    // Heuristic direction: full recovery.
    const PeelResult peel = peel_circuit(
        obf.nf, layout, static_cast<int>(inst.circuit.gates.size()) + 1);
    if (peel.success &&
        obfuscate_circuit(peel.circuit, ObfMode::naive).nf == obf.nf)
      ++recovered;
  }
  const double rate = recovered / 50.0;
  c.require(rate >= 0.80, "recovery rate " + std::to_string(rate) +
                              " below the 0.80 alarm threshold");
  if (c.ok) {
    std::ostringstream os;
    os << correct_strips << "/" << correct_strips
       << " true strips positive, recovery " << recovered << "/50";
    c.detail = os.str();
  }
  return c;
}

Check criterion_randomized() {
  Check c;
  auto a5 = a5_table();
  std::mt19937_64 rng(kCorpusSeed + 3);
  const std::vector<AttackInstance> instances = attack_instances();
  int recovered = 0;
  int sim_checks = 0;
  for (const AttackInstance &inst : instances) {
    const Layout layout(inst.circuit.wires);
    const ObfuscationResult obf =
        obfuscate_circuit(inst.circuit, ObfMode::randomized, inst.seed);
    // Determinism under the same seed.
    if (!(obfuscate_circuit(inst.circuit, ObfMode::randomized, inst.seed) ==
          obf)) {
      c.fail("randomized mode is not deterministic given the seed");
      break;
    }
    // Functional equivalence re-run (criterion 8, property 1).
    const BraidWord compiled = compile_circuit(inst.circuit);
    for (int rep = 0; rep < 100; ++rep) {
      DitState s{a5, random_bits_state(layout.strands(), rng)};
      std::vector<int> expect = s.dits;
      simulate_inplace(compiled, *a5, expect);
      std::vector<int> got = s.dits;
      simulate_inplace(obf.word, *a5, got);
      if (expect != got) {
        c.fail("randomized output changed the functionality");
        break;
      }
      ++sim_checks;
    }
    if (!c.ok) break;
    const PeelResult peel = peel_circuit(
        obf.nf, layout, static_cast<int>(inst.circuit.gates.size()) + 1);
    if (peel.success &&
        obfuscate_circuit(peel.circuit, ObfMode::naive).nf == obf.nf)
      ++recovered;
  }
  const double rate = recovered / 50.0;
  c.require(rate <= 0.20, "recovery rate " + std::to_string(rate) +
                              " above the 0.20 alarm threshold");
  if (c.ok) {
    std::ostringstream os;
    os << "equivalence held over " << sim_checks
       << " state checks; recovery collapsed to " << recovered << "/50";
    c.detail = os.str();
  }
  return c;
}

Check criterion_gcd() {
  Check c;
  std::mt19937_64 rng(kCorpusSeed + 4);
  // Prefix-sharing pairs: the compiled common prefix divides the gcd.
  for (int k = 0; k < 20 && c.ok; ++k) {
    const int w = (k % 2) ? 4 : 3;
    const ToffoliCircuit prefix = random_circuit(w, 1 + (k % 2), rng);
    ToffoliCircuit a = prefix, b = prefix;
    const std::vector<ToffoliGate> placements = all_placements(w);
    const ToffoliGate ga = placements[rng() % placements.size()];
    ToffoliGate gb = ga;
    while (gb == ga) gb = placements[rng() % placements.size()];
    a.gates.push_back(ga);
    b.gates.push_back(gb);
    const ObfuscationResult oa = obfuscate_circuit(a, ObfMode::naive);
    const ObfuscationResult ob = obfuscate_circuit(b, ObfMode::naive);
    const BraidWord g = gcd_strip(oa, ob);
    if (!left_divides(normal_form(compile_circuit(prefix)), normal_form(g)))
      c.fail("compiled prefix does not divide the gcd at pair " +
             std::to_string(k));
  }
  // Brute-force validation of left_gcd on small positive words.
  int validated = 0;
  for (int trial = 0; trial < 150 && c.ok; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::uniform_int_distribution<int> len_dist(0, 6);
    std::uniform_int_distribution<int> gen(1, n - 1);
    auto random_positive = [&]() {
      std::vector<int> letters;
      const int len = len_dist(rng);
      for (int k = 0; k < len; ++k) letters.push_back(gen(rng));
      return BraidWord(n, std::move(letters));
    };
    const BraidWord a = random_positive();
    const BraidWord b = random_positive();
    const NormalForm na = normal_form(a), nb = normal_form(b);
    const BraidWord g = left_gcd(a, b);
    const NormalForm ng = normal_form(g);
    if (!left_divides(ng, na) || !left_divides(ng, nb)) {
      c.fail("gcd does not divide its inputs");
      break;
    }
    // Oracle: enumerate every positive word up to the shorter length and
    // check that each common divisor also divides the gcd.
    const int max_len = static_cast<int>(std::min(a.size(), b.size()));
    std::set<std::string> seen;
    std::vector<int> stack;
    std::function<bool(int)> walk = [&](int depth) -> bool {
      const BraidWord d(n, stack);
      const NormalForm nd = normal_form(d);
      std::ostringstream key;
      key << nd.m << ':';
      for (const Perm &f : nd.factors)
        for (const int v : f.images()) key << v << ',';
      if (seen.insert(key.str()).second) {
        if (left_divides(nd, na) && left_divides(nd, nb) &&
            !left_divides(nd, ng)) {
          c.fail("common divisor missing from the gcd");
          return false;
        }
      }
      if (depth == max_len) return true;
      for (int i = 1; i <= n - 1; ++i) {
        stack.push_back(i);
        const bool go = walk(depth + 1);
        stack.pop_back();
        if (!go) return false;
      }
      return true;
    };
    walk(0);
    ++validated;
  }
  if (c.ok)
    c.detail = "20 prefix pairs divide; " + std::to_string(validated) +
               " brute-force gcd validations";
  return c;
}

Check criterion_slowdown() {
  Check c;
  const std::vector<BraidWord> corpus = property_corpus();
  long long worst_margin = 0;
  bool first = true;
  for (const BraidWord &w : corpus) {
    const NormalForm nf = normal_form(w);
    const long long out_letters = nf.canonical_letter_count();
    const long long len = static_cast<long long>(w.size());
    const long long bound =
        4 * len * len + static_cast<long long>(w.n) * w.n;
    if (out_letters > bound)
      c.fail("output " + std::to_string(out_letters) + " exceeds bound " +
             std::to_string(bound) + " for input of " + std::to_string(len));
    const long long margin = bound - out_letters;
    if (first || margin < worst_margin) {
      worst_margin = margin;
      first = false;
    }
  }
  if (c.ok)
    c.detail = "all 1000 outputs within 4*len^2+n^2 (tightest margin " +
               std::to_string(worst_margin) + ")";
  return c;
}

Check criterion_ybe_search() {
  Check c;
  const std::vector<PairGate> found = ybe_search(2);
  std::set<std::vector<std::int32_t>> maps;
  for (const PairGate &g : found) maps.insert(g.map);
  c.require(found.size() == 5,
            "found " + std::to_string(found.size()) + " solutions, not 5");
  c.require(maps.count(identity_gate(2).map) == 1, "identity missing");
  c.require(maps.count(swap_gate(2).map) == 1, "swap missing");
  for (const PairGate &g : found)
    c.require(maps.count(inverse_gate(g).map) == 1,
              "solution set is not closed under inversion");
  // Independent oracle: direct enumeration of the 24 candidates.
  std::vector<int> perm{0, 1, 2, 3};
  std::size_t oracle_count = 0;
  do {
    auto ap = [&perm](int a, int b) {
      const int t = perm[a * 2 + b];
      return std::pair<int, int>{t / 2, t % 2};
    };
    bool ok = true;
    for (int a = 0; a < 2 && ok; ++a)
      for (int b = 0; b < 2 && ok; ++b)
        for (int x = 0; x < 2 && ok; ++x) {
          auto [a1, b1] = ap(a, b);
          auto [b2, x1] = ap(b1, x);
          auto [a2, b3] = ap(a1, b2);
          auto [bb1, xx1] = ap(b, x);
          auto [aa1, bb2] = ap(a, bb1);
          auto [bb3, xx2] = ap(bb2, xx1);
          if (!(a2 == aa1 && b3 == bb3 && x1 == xx2)) ok = false;
        }
    if (ok) {
      ++oracle_count;
      std::vector<std::int32_t> m(perm.begin(), perm.end());
      c.require(maps.count(m) == 1, "oracle solution missing from search");
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  c.require(oracle_count == found.size(),
            "oracle count differs from search count");
  if (c.ok) c.detail = "24 candidates, 5 solutions, oracle agrees";
  return c;
}

}  // namespace

int run_acceptance_suite(
    const std::function<void(const CriterionResult &)> &on_result) {
  struct Entry {
    int id;
    const char *name;
    std::function<Check()> run;
  };
  const Entry entries[] = {
      {1, "yang-baxter-a5", criterion_yang_baxter},
      {2, "gate-order-60", criterion_gate_order},
      {3, "orbit-44", criterion_orbit},
      {4, "golden-toffoli-braid", criterion_golden_toffoli},
      {5, "toffoli-semantics", criterion_toffoli_semantics},
      {6, "factor-stability", criterion_factor_stability},
      {7, "normal-form-properties", criterion_nf_properties},
      {8, "def2-conformance", criterion_def2},
      {9, "peeling-attack", criterion_peeling},
      {10, "randomized-countermeasure", criterion_randomized},
      {11, "gcd-stripping", criterion_gcd},
      {12, "polynomial-slowdown", criterion_slowdown},
      {13, "ybe-search-d2", criterion_ybe_search},
  };
  int failures = 0;
  for (const Entry &e : entries) {
    const auto start = std::chrono::steady_clock::now();
    Check check;
    try {
      check = e.run();
    } catch (const std::exception &ex) {
      check.ok = false;
      check.detail = std::string("exception: ") + ex.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    CriterionResult result;
    result.id = e.id;
    result.name = e.name;
    result.passed = check.ok;
    result.detail = check.detail;
    result.seconds =
        std::chrono::duration<double>(stop - start).count();
    if (!check.ok) ++failures;
    on_result(result);
  }
  return failures;
}

}  // namespace braidobf
