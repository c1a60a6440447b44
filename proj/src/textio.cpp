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

#include "braidobf/textio.hpp"

#include <sstream>

namespace braidobf {

namespace {

// Tokenizer over '#'-commented, whitespace-separated text.
class Tokens {
 public:
  explicit Tokens(const std::string &text) {
    std::istringstream lines(text);
    std::string line;
    std::string stripped;
    while (std::getline(lines, line)) {
      stripped += line.substr(0, line.find('#'));
      stripped += '\n';
    }
    in_.str(stripped);
  }

  std::string word(const char *what) {
    std::string s;
    if (!(in_ >> s))
      throw FormatError(std::string("expected ") + what +
                        ", found end of input");
    return s;
  }

  bool try_word(std::string &out) { return static_cast<bool>(in_ >> out); }

  long long integer(const char *what) {
    const std::string s = word(what);
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception &) {
      throw FormatError(std::string("expected integer ") + what +
                        ", found '" + s + "'");
    }
  }

  void expect_end() {
    std::string s;
    if (in_ >> s)
      throw FormatError("trailing tokens beginning at '" + s + "'");
  }

 private:
  std::istringstream in_;
};

int bounded(long long v, long long lo, long long hi, const char *what) {
  if (v < lo || v > hi)
    throw FormatError(std::string(what) + " out of range [" +
                      std::to_string(lo) + ".." + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

}  // namespace

BraidWord parse_braid(const std::string &text) {
  Tokens tok(text);
  const std::string header = tok.word("header 'braid <n>' or 'rcirc <n>'");
  if (header != "braid" && header != "rcirc")
    throw FormatError("braid file must start with 'braid' or 'rcirc', found '" +
                      header + "'");
  const int n = bounded(tok.integer("strand count"), 1, 64, "strand count");
  std::vector<int> letters;
  std::string s;
  while (tok.try_word(s)) {
    long long v = 0;
    try {
      std::size_t used = 0;
      v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception &) {
      throw FormatError("expected integer letter, found '" + s + "'");
    }
    if (v == 0) throw FormatError("letter 0 is not a generator");
    bounded(v, -(n - 1), n - 1, "letter");
    letters.push_back(static_cast<int>(v));
  }
  try {
    return BraidWord(n, std::move(letters));
  } catch (const DomainError &e) {
    throw FormatError(e.what());
  }
}

std::string format_braid(const BraidWord &w, const std::string &kind) {
  if (kind != "braid" && kind != "rcirc")
    throw DomainError("braid kind must be 'braid' or 'rcirc'");
  std::ostringstream out;
  out << kind << ' ' << w.n << '\n';
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    out << w.letters[i];
    out << ((i % 16 == 15 || i + 1 == w.letters.size()) ? '\n' : ' ');
  }
  return out.str();
}

ToffoliCircuit parse_circuit(const std::string &text) {
  Tokens tok(text);
  const std::string header = tok.word("header 'circuit <w>'");
  if (header != "circuit")
    throw FormatError("circuit file must start with 'circuit', found '" +
                      header + "'");
  const int w = bounded(tok.integer("wire count"), 3, 1000, "wire count");
  std::vector<ToffoliGate> gates;
  std::string kw;
  while (tok.try_word(kw)) {
    if (kw != "toffoli")
      throw FormatError("expected 'toffoli', found '" + kw + "'");
    const int c1 = bounded(tok.integer("control"), 1, w, "control wire");
    const int c2 = bounded(tok.integer("control"), 1, w, "control wire");
    const int t = bounded(tok.integer("target"), 1, w, "target wire");
    try {
      gates.emplace_back(c1, c2, t);
    } catch (const DomainError &e) {
      throw FormatError(e.what());
    }
  }
  try {
    return ToffoliCircuit(w, std::move(gates));
  } catch (const DomainError &e) {
    throw FormatError(e.what());
  }
}

std::string format_circuit(const ToffoliCircuit &c) {
  std::ostringstream out;
  out << "circuit " << c.wires << '\n';
  for (const ToffoliGate &g : c.gates)
    out << "toffoli " << g.c1 << ' ' << g.c2 << ' ' << g.t << '\n';
  return out.str();
}

NormalForm parse_nf(const std::string &text) {
  Tokens tok(text);
  const std::string header = tok.word("header 'nf <n> <m> <p>'");
  if (header != "nf")
    throw FormatError("normal-form file must start with 'nf', found '" +
                      header + "'");
  NormalForm nf;
  nf.n = bounded(tok.integer("strand count"), 1, 64, "strand count");
  nf.m = tok.integer("infimum");
  const int p = bounded(tok.integer("factor count"), 0, 1 << 24,
                        "factor count");
  for (int j = 0; j < p; ++j) {
    std::vector<int> images(static_cast<std::size_t>(nf.n));
    for (int i = 0; i < nf.n; ++i)
      images[i] = bounded(tok.integer("factor image"), 1, nf.n, "image");
    try {
      nf.factors.push_back(Perm::from_images(images));
    } catch (const DomainError &e) {
      throw FormatError(std::string("factor ") + std::to_string(j + 1) +
                        ": " + e.what());
    }
  }
  tok.expect_end();
  try {
    validate_normal_form(nf);
  } catch (const DomainError &e) {
    throw FormatError(e.what());
  }
  return nf;
}

std::string format_nf(const NormalForm &nf) {
  std::ostringstream out;
  out << "nf " << nf.n << ' ' << nf.m << ' ' << nf.factors.size() << '\n';
  for (const Perm &f : nf.factors) {
    const std::vector<int> img = f.images();
    for (std::size_t i = 0; i < img.size(); ++i)
      out << img[i] << (i + 1 == img.size() ? '\n' : ' ');
  }
  return out.str();
}

DitState parse_state(const std::string &text,
                     std::shared_ptr<const GroupTable> group) {
  Tokens tok(text);
  const std::string header = tok.word("header 'state <n>'");
  if (header != "state")
    throw FormatError("state file must start with 'state', found '" + header +
                      "'");
  const int n = bounded(tok.integer("dit count"), 1, 1 << 16, "dit count");
  DitState s;
  s.group = std::move(group);
  s.dits.reserve(static_cast<std::size_t>(n));
  const GroupTable &g = *s.group;
  for (int k = 0; k < n; ++k) {
    if (g.has_images()) {
      std::vector<int> img(5);
      for (int i = 0; i < 5; ++i)
        img[i] = bounded(tok.integer("image"), 1, 5, "image");
      int found = -1;
      for (int e = 0; e < g.order() && found < 0; ++e) {
        const auto &ref = g.images(e);
        bool same = true;
        for (int i = 0; i < 5; ++i)
          if (ref[i] != img[i] - 1) same = false;
        if (same) found = e;
      }
      if (found < 0)
        throw FormatError("dit " + std::to_string(k + 1) +
                          " is not an element of group " + g.name());
      s.dits.push_back(found);
    } else {
      s.dits.push_back(bounded(tok.integer("element index"), 0,
                               g.order() - 1, "element index"));
    }
  }
  tok.expect_end();
  return s;
}

std::string format_state(const DitState &s) {
  std::ostringstream out;
  out << "state " << s.dits.size() << '\n';
  const GroupTable &g = *s.group;
  for (const int e : s.dits) {
    if (g.has_images()) {
      const auto &img = g.images(e);
      for (int i = 0; i < 5; ++i)
        out << int(img[i]) + 1 << (i == 4 ? '\n' : ' ');
    } else {
      out << e << '\n';
    }
  }
  return out.str();
}

void Report::add(const std::string &key, const std::string &value) {
  entries_.emplace_back(key, value);
}

void Report::add(const std::string &key, long long value) {
  entries_.emplace_back(key, std::to_string(value));
}

std::string Report::text() const {
  std::string out;
  for (const auto &[k, v] : entries_) {
    out += k;
    out += '=';
    out += v;
    out += '\n';
  }
  return out;
}

}  // namespace braidobf
