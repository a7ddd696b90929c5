#pragma once

#include "words.hpp"

#include <string>
#include <vector>

namespace lorder {

struct HandleStats {
  long steps = 0;
};

inline long& handle_budget() {
  static long b = 5'000'000;
  return b;
}

// Dehornoy handle reduction. Generator index i (0-based) is sigma_{i+1}.
// A handle is s_i^e v s_i^-e with v using only indices > i; the one with the
// leftmost right end is reduced first, so it never contains another handle.
inline Word handle_reduce(const Word& input, int strands, HandleStats* st = nullptr) {
  std::vector<Letter> w(input.begin(), input.end());
  const int k = strands - 1;
  long steps = 0;
  std::vector<long> last(k + 1);
  for (;;) {
    std::fill(last.begin(), last.end(), -1);
    long lo = -1, hi = -1;
    for (long p = 0; p < static_cast<long>(w.size()); ++p) {
      int j = w[p].gen;
      for (int t = j + 1; t < k; ++t) last[t] = -1;
      if (last[j] >= 0 && w[last[j]].sign == -w[p].sign) {
        lo = last[j];
        hi = p;
        break;
      }
      last[j] = p;
    }
    if (lo < 0) break;
    if (++steps > handle_budget())
      throw ComputeError("handle reduction exceeded step budget of " + std::to_string(handle_budget()));
    int i = w[lo].gen, e = w[lo].sign;
    std::vector<Letter> mid;
    for (long p = lo + 1; p < hi; ++p) {
      const Letter& l = w[p];
      if (l.gen == i + 1) {
        mid.push_back({i + 1, -e});
        mid.push_back({i, l.sign});
        mid.push_back({i + 1, e});
      } else {
        mid.push_back(l);
      }
    }
    std::vector<Letter> out(w.begin(), w.begin() + lo);
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), w.begin() + hi + 1, w.end());
    w = Word(out).letters();
  }
  if (st) st->steps += steps;
  return Word(w);
}

// main index (0-based) and its sign; (-1, 0) for the empty word
struct MainIndex {
  int index = -1;
  int sign = 0;
};

inline MainIndex main_index(const Word& w) {
  MainIndex m;
  for (auto& l : w) {
    if (m.index < 0 || l.gen < m.index) {
      m.index = l.gen;
      m.sign = l.sign;
    } else if (l.gen == m.index && l.sign != m.sign) {
      throw ComputeError("word is not sigma-monotone at its main index");
    }
  }
  return m;
}

// Artin action on the free group F_n, used as a faithful canonical key.
// images[j] is the image of x_j under the automorphism of the braid.
inline std::vector<Word> artin_images(const Word& b, int strands, std::size_t cap = 200000) {
  std::vector<Word> t;
  for (int j = 0; j < strands; ++j) t.push_back(Word::gen(j));
  std::size_t total = strands;
  for (auto& l : b) {
    int i = l.gen;
    Word xi = t[i], xj = t[i + 1];
    if (l.sign > 0) {
      t[i] = xi * xj * xi.inverse();
      t[i + 1] = xi;
    } else {
      t[i] = xj;
      t[i + 1] = xj.inverse() * xi * xj;
    }
    total = 0;
    for (auto& x : t) total += x.size();
    if (total > cap) throw ComputeError("braid key exceeds size cap");
  }
  return t;
}

inline std::string artin_key(const Word& b, int strands) {
  std::string s;
  for (auto& x : artin_images(b, strands)) {
    s += x.key();
    s += '|';
  }
  return s;
}

}  // namespace lorder
