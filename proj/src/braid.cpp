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

#include "braidobf/braid.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace braidobf {

BraidWord::BraidWord(int strands, std::vector<int> time_letters)
    : n(strands), letters(std::move(time_letters)) {
  if (n < 1) throw DomainError("strand count must be >= 1");
  if (n > 64) throw DomainError("strand count above supported limit of 64");
  for (const int a : letters) {
    const int k = std::abs(a);
    if (k < 1 || k > n - 1)
      throw DomainError("letter index out of range 1..n-1");
  }
}

bool BraidWord::all_positive() const {
  return std::all_of(letters.begin(), letters.end(),
                     [](int a) { return a > 0; });
}

long long BraidWord::exponent_sum() const {
  long long e = 0;
  for (const int a : letters) e += a > 0 ? 1 : -1;
  return e;
}

BraidWord concat(const BraidWord &a, const BraidWord &b) {
  if (a.n != b.n) throw DomainError("strand-count mismatch in concatenation");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord invert(const BraidWord &w) {
  BraidWord out;
  out.n = w.n;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(-*it);
  return out;
}

BraidWord tau_word(const BraidWord &w) {
  BraidWord out;
  out.n = w.n;
  out.letters.reserve(w.letters.size());
  for (const int a : w.letters)
    out.letters.push_back(a > 0 ? w.n - a : -(w.n + a));
  return out;
}

Perm permutation_image(const BraidWord &w) {
  Perm p = Perm::identity(w.n);
  for (const int a : w.letters) p.append_transposition(std::abs(a));
  return p;
}

long long NormalForm::canonical_letter_count() const {
  long long total = std::abs(m) * (static_cast<long long>(n) * (n - 1) / 2);
  for (const Perm &f : factors) total += f.inversions();
  return total;
}

namespace {

// Slide loop backing the public left_weight_pair operation.
bool left_weight_fix(Perm &u, Perm &v) {
  bool changed = false;
  while (true) {
    const std::uint64_t movable =
        v.left_descent_mask() & ~u.right_descent_mask();
    if (movable == 0) break;
    const int i = std::countr_zero(movable) + 1;
    u.append_transposition(i);
    v.prepend_transposition(i);
    changed = true;
  }
  return changed;
}

// ------------------------------------------------------------------
// Normalization engine.
//
// The chain holds the simple factors of Delta^m . f_1 ... f_p while a
// word or a product is folded in from the RIGHT: prepending a factor in
// front of Delta^m costs one parity flip, and a factor that fills up to
// a full half twist is extracted where it stands (it commutes to the
// front past the few factors to its left). Descent masks, the position
// table and the crossing count of every factor are maintained
// incrementally, so one crossing slide costs O(1); a worklist of
// disturbed adjacent pairs drives local left-weighting to the global
// fixpoint. Factors live in a doubly-linked list over flat arrays.
// ------------------------------------------------------------------
class NfEngine {
 public:
  NfEngine(int strands, std::size_t max_slots)
      : n_(strands),
        full_(static_cast<int>(strands) * (strands - 1) / 2),
        img_(max_slots * strands),
        pos_(max_slots * strands),
        lmask_(max_slots),
        rmask_(max_slots),
        inv_(max_slots),
        next_(max_slots + 1),
        prev_(max_slots + 1),
        dirty_(max_slots, 0) {
    // Slot max_slots acts as the list sentinel.
    head_ = sentinel();
    next_[sentinel()] = sentinel();
    prev_[sentinel()] = sentinel();
  }

  long long delta_power() const { return m_; }
  void add_delta_power(long long d) { m_ += d; }
  bool flip_parity() const { return (m_ % 2) != 0; }

  // Prepend a simple factor given by 0-based images (already commuted
  // past Delta^m by the caller), then restore left-weightedness.
  void prepend(const std::uint8_t *images) {
    const std::size_t s = alloc();
    std::uint8_t *img = &img_[s * n_];
    std::uint8_t *pos = &pos_[s * n_];
    int inv = 0;
    for (int i = 0; i < n_; ++i) {
      img[i] = images[i];
      pos[images[i]] = static_cast<std::uint8_t>(i);
    }
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) inv += img[i] > img[j];
    inv_[s] = inv;
    lmask_[s] = mask_from(pos);
    rmask_[s] = mask_from(img);
    link_front(s);
    if (inv == full_) {
      extract(s);
    } else if (inv == 0) {
      unlink(s);
    } else {
      push_pair(s);
      settle();
    }
  }

  // Fill the chain (back to front) from existing factors; used to seed a
  // product with its right operand. Factors must form a normal sequence.
  void seed(const std::vector<Perm> &factors) {
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      const std::size_t s = alloc();
      std::uint8_t *img = &img_[s * n_];
      std::uint8_t *pos = &pos_[s * n_];
      const std::vector<int> images = it->images();
      int inv = 0;
      for (int i = 0; i < n_; ++i) {
        img[i] = static_cast<std::uint8_t>(images[i] - 1);
        pos[img[i]] = static_cast<std::uint8_t>(i);
      }
      for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) inv += img[i] > img[j];
      inv_[s] = inv;
      lmask_[s] = mask_from(pos);
      rmask_[s] = mask_from(img);
      link_front(s);
    }
  }

  // Drain the chain into a NormalForm.
  void finish(NormalForm &nf) {
    nf.m = m_;
    nf.factors.clear();
    std::vector<int> images(static_cast<std::size_t>(n_));
    for (std::size_t s = head_; s != sentinel(); s = next_[s]) {
      const std::uint8_t *img = &img_[s * n_];
      for (int i = 0; i < n_; ++i) images[i] = img[i] + 1;
      nf.factors.push_back(Perm::from_images(images));
    }
  }

 private:
  std::size_t sentinel() const { return dirty_.size(); }

  std::size_t alloc() {
    const std::size_t s = used_++;
    if (s >= dirty_.size()) throw DomainError("normal form engine overflow");
    return s;
  }

  std::uint64_t mask_from(const std::uint8_t *arr) const {
    std::uint64_t mask = 0;
    for (int i = 0; i + 1 < n_; ++i)
      if (arr[i] > arr[i + 1]) mask |= std::uint64_t{1} << i;
    return mask;
  }

  void refresh_bit(std::uint64_t &mask, const std::uint8_t *arr, int b) {
    if (b < 0 || b + 1 >= n_) return;
    const std::uint64_t bit = std::uint64_t{1} << b;
    if (arr[b] > arr[b + 1])
      mask |= bit;
    else
      mask &= ~bit;
  }

  void link_front(std::size_t s) {
    next_[s] = head_;
    prev_[s] = sentinel();
    if (head_ != sentinel()) prev_[head_] = s;
    head_ = s;
  }

  void unlink(std::size_t s) {
    const std::size_t p = prev_[s], q = next_[s];
    if (p == sentinel())
      head_ = q;
    else
      next_[p] = q;
    if (q != sentinel()) prev_[q] = p;
    next_[s] = prev_[s] = sentinel();
    dirty_[s] = 2;  // dead
  }

  // Commute a full half twist at slot s to the front: every factor to
  // its left is conjugated by the flip.
  void extract(std::size_t s) {
    for (std::size_t k = prev_[s]; k != sentinel(); k = prev_[k]) apply_tau(k);
    ++m_;
    const std::size_t left = prev_[s], right = next_[s];
    unlink(s);
    if (left != sentinel())
      push_pair(left);
    else if (right != sentinel())
      push_pair(right);
  }

  void apply_tau(std::size_t s) {
    std::uint8_t *img = &img_[s * n_];
    std::uint8_t *pos = &pos_[s * n_];
    for (int i = 0, j = n_ - 1; i < j; ++i, --j) std::swap(img[i], img[j]);
    for (int i = 0; i < n_; ++i)
      img[i] = static_cast<std::uint8_t>(n_ - 1 - img[i]);
    for (int i = 0; i < n_; ++i) pos[img[i]] = static_cast<std::uint8_t>(i);
    lmask_[s] = reverse_mask(lmask_[s]);
    rmask_[s] = reverse_mask(rmask_[s]);
  }

  std::uint64_t reverse_mask(std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (int b = 0; b + 1 < n_; ++b)
      if (mask >> b & 1) out |= std::uint64_t{1} << (n_ - 2 - b);
    return out;
  }

  void push_pair(std::size_t s) {
    if (dirty_[s] == 0) {
      dirty_[s] = 1;
      work_.push_back(s);
    }
  }

  // Left-weight the pair whose left factor sits at slot s. Returns true
  // if anything changed (crossings moved, a factor drained, or a half
  // twist was extracted).
  bool fix(std::size_t s) {
    const std::size_t v = next_[s];
    if (v == sentinel()) return false;
    std::uint8_t *uimg = &img_[s * n_];
    std::uint8_t *upos = &pos_[s * n_];
    std::uint8_t *vimg = &img_[v * n_];
    std::uint8_t *vpos = &pos_[v * n_];
    bool changed = false;
    while (true) {
      const std::uint64_t movable = lmask_[v] & ~rmask_[s];
      if (movable == 0) break;
      const int b = std::countr_zero(movable);
      // u gains the crossing at positions (b, b+1).
      {
        const std::uint8_t a0 = uimg[b], a1 = uimg[b + 1];
        uimg[b] = a1;
        uimg[b + 1] = a0;
        upos[a0] = static_cast<std::uint8_t>(b + 1);
        upos[a1] = static_cast<std::uint8_t>(b);
        ++inv_[s];
        refresh_bit(rmask_[s], uimg, b - 1);
        refresh_bit(rmask_[s], uimg, b);
        refresh_bit(rmask_[s], uimg, b + 1);
        for (const int val : {int(a0), int(a1)}) {
          refresh_bit(lmask_[s], upos, val - 1);
          refresh_bit(lmask_[s], upos, val);
        }
      }
      // v loses it: values (b, b+1) swap places.
      {
        const std::uint8_t q0 = vpos[b], q1 = vpos[b + 1];
        vimg[q0] = static_cast<std::uint8_t>(b + 1);
        vimg[q1] = static_cast<std::uint8_t>(b);
        vpos[b] = q1;
        vpos[b + 1] = q0;
        --inv_[v];
        refresh_bit(lmask_[v], vpos, b - 1);
        refresh_bit(lmask_[v], vpos, b);
        refresh_bit(lmask_[v], vpos, b + 1);
        for (const int p : {int(q0), int(q1)}) {
          refresh_bit(rmask_[v], vimg, p - 1);
          refresh_bit(rmask_[v], vimg, p);
        }
      }
      changed = true;
      if (inv_[s] == full_) {
        if (inv_[v] == 0) unlink(v);
        extract(s);
        return true;
      }
    }
    if (inv_[v] == 0) {
      unlink(v);
      push_pair(s);
      return true;
    }
    if (changed) {
      if (prev_[s] != sentinel()) push_pair(prev_[s]);
      push_pair(v);
    }
    return changed;
  }

  void settle() {
    while (!work_.empty()) {
      const std::size_t s = work_.back();
      work_.pop_back();
      if (dirty_[s] != 1) continue;
      dirty_[s] = 0;
      fix(s);
    }
  }

  int n_;
  int full_;
  long long m_ = 0;
  std::size_t head_;
  std::size_t used_ = 0;
  std::vector<std::uint8_t> img_, pos_;
  std::vector<std::uint64_t> lmask_, rmask_;
  std::vector<int> inv_;
  std::vector<std::size_t> next_, prev_;
  std::vector<std::uint8_t> dirty_;  // 0 clean, 1 queued, 2 dead
  std::vector<std::size_t> work_;
};

}  // namespace

std::pair<Perm, Perm> left_weight_pair(const Perm &u, const Perm &v) {
  if (u.degree() != v.degree())
    throw DomainError("strand-count mismatch in left_weight_pair");
  Perm a = u, b = v;
  left_weight_fix(a, b);
  return {std::move(a), std::move(b)};
}

NormalForm normal_form(const BraidWord &w) {
  NormalForm nf;
  nf.n = w.n;
  if (w.n < 2 || w.letters.empty()) return nf;

  // Fold the word in from the right. A letter prepended in front of
  // Delta^m picks up the flip when m is odd; an inverse letter becomes
  // one Delta^-1 (absorbed into m on the spot) times the simple factor
  // with permutation w0 . t_i.
  NfEngine engine(w.n, w.letters.size() + 1);
  std::vector<std::uint8_t> buf(static_cast<std::size_t>(w.n));
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const int a = *it;
    int i = std::abs(a);
    if (engine.flip_parity()) i = w.n - i;
    if (a > 0) {
      for (int x = 0; x < w.n; ++x) buf[x] = static_cast<std::uint8_t>(x);
      std::swap(buf[i - 1], buf[i]);
      engine.prepend(buf.data());
    } else {
      for (int x = 0; x < w.n; ++x)
        buf[x] = static_cast<std::uint8_t>(w.n - 1 - x);
      std::swap(buf[i - 1], buf[i]);
      engine.prepend(buf.data());
      engine.add_delta_power(-1);
    }
  }
  engine.finish(nf);
  return nf;
}

BraidWord word_of(const NormalForm &nf) {
  BraidWord out;
  out.n = nf.n;
  out.letters.reserve(static_cast<std::size_t>(nf.canonical_letter_count()));
  if (nf.m != 0) {
    const std::vector<int> delta = simple_to_word(Perm::longest(nf.n));
    if (nf.m > 0) {
      for (long long k = 0; k < nf.m; ++k)
        out.letters.insert(out.letters.end(), delta.begin(), delta.end());
    } else {
      std::vector<int> delta_inv(delta.rbegin(), delta.rend());
      for (int &a : delta_inv) a = -a;
      for (long long k = 0; k < -nf.m; ++k)
        out.letters.insert(out.letters.end(), delta_inv.begin(),
                           delta_inv.end());
    }
  }
  for (const Perm &f : nf.factors) {
    const std::vector<int> word = simple_to_word(f);
    out.letters.insert(out.letters.end(), word.begin(), word.end());
  }
  return out;
}

NormalForm nf_product(const NormalForm &a, const NormalForm &b) {
  if (a.n != b.n) throw DomainError("strand-count mismatch in nf_product");
  NormalForm out;
  out.n = a.n;
  out.m = a.m + b.m;
  out.factors.reserve(a.factors.size() + b.factors.size());
  // Delta^ma Fa Delta^mb Fb = Delta^(ma+mb) tau^mb(Fa) Fb; tau preserves
  // left-weightedness, so only the junction needs renormalizing.
  const bool flip = (b.m % 2) != 0;
  for (const Perm &f : a.factors) out.factors.push_back(flip ? tau(f) : f);
  const std::size_t junction = out.factors.size();
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  normalize_factors(out.factors, junction == 0 ? 1 : junction);
  strip_factors(out.n, out.m, out.factors);
  return out;
}

std::uint64_t leading_atom_mask(const NormalForm &nf) {
  if (nf.m > 0)
    return (std::uint64_t{1} << (nf.n - 1)) - 1;  // Delta: every atom
  if (nf.m < 0 || nf.factors.empty()) return 0;
  return nf.factors.front().left_descent_mask();
}

NormalForm nf_strip_left_atom(const NormalForm &nf, int i) {
  if (i < 1 || i > nf.n - 1)
    throw DomainError("atom index out of range 1..n-1");
  BraidWord atom_inverse(nf.n, {-i});
  return nf_product(normal_form(atom_inverse), nf);
}

bool is_positive(const NormalForm &nf) { return nf.m >= 0; }

BraidWord left_gcd(const BraidWord &a, const BraidWord &b) {
  if (a.n != b.n) throw DomainError("strand-count mismatch in left_gcd");
  if (!a.all_positive() || !b.all_positive())
    throw DomainError("left_gcd requires positive words");
  NormalForm na = normal_form(a);
  NormalForm nb = normal_form(b);
  BraidWord out;
  out.n = a.n;
  while (true) {
    const std::uint64_t common = leading_atom_mask(na) & leading_atom_mask(nb);
    if (common == 0) break;
    const int i = std::countr_zero(common) + 1;
    na = nf_strip_left_atom(na, i);
    nb = nf_strip_left_atom(nb, i);
    out.letters.push_back(i);
  }
  return out;
}

bool left_divides(const NormalForm &d, const NormalForm &x) {
  return nf_product(normal_form(invert(word_of(d))), x).m >= 0;
}

void validate_normal_form(const NormalForm &nf) {
  if (nf.n < 1) throw DomainError("normal form: strand count must be >= 1");
  const Perm w0 = Perm::longest(nf.n);
  for (const Perm &f : nf.factors) {
    if (f.degree() != nf.n)
      throw DomainError("normal form: factor degree differs from n");
    if (f.is_identity())
      throw DomainError("normal form: identity factor not allowed");
  }
  if (!nf.factors.empty() && nf.factors.front() == w0)
    throw DomainError("normal form: first factor equals Delta's permutation");
  for (std::size_t j = 0; j + 1 < nf.factors.size(); ++j) {
    const std::uint64_t excess = nf.factors[j + 1].left_descent_mask() &
                                 ~nf.factors[j].right_descent_mask();
    if (excess != 0)
      throw DomainError("normal form: factors " + std::to_string(j + 1) +
                        "," + std::to_string(j + 2) +
                        " violate the left-weighted condition");
  }
}

}  // namespace braidobf
