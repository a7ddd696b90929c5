#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace lorder {

struct Letter {
  int gen = 0;   // 0-based generator index
  int sign = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
  // ordering used by ball enumeration: (gen, +) before (gen, -)
  int rank() const { return 2 * gen + (sign < 0 ? 1 : 0); }
  Letter inv() const { return {gen, -sign}; }
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> raw) { for (auto& l : raw) push(l); }

  static Word gen(int i, int e = 1) {
    Word w;
    for (int k = 0; k < std::abs(e); ++k) w.push({i, e > 0 ? 1 : -1});
    return w;
  }

  // append with free cancellation
  void push(Letter l) {
    if (!v_.empty() && v_.back().gen == l.gen && v_.back().sign == -l.sign)
      v_.pop_back();
    else
      v_.push_back(l);
  }

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  const Letter& operator[](std::size_t i) const { return v_[i]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<Letter>& letters() const { return v_; }

  Word inverse() const {
    Word r;
    r.v_.reserve(v_.size());
    for (auto it = v_.rbegin(); it != v_.rend(); ++it) r.v_.push_back(it->inv());
    return r;
  }

  Word operator*(const Word& o) const {
    Word r = *this;
    for (auto& l : o.v_) r.push(l);
    return r;
  }

  Word pow(long e) const {
    Word base = e < 0 ? inverse() : *this, r;
    for (long k = 0; k < std::abs(e); ++k) r = r * base;
    return r;
  }

  // run-length syllables (gen, signed exponent)
  std::vector<std::pair<int, long>> syllables() const {
    std::vector<std::pair<int, long>> s;
    for (auto& l : v_) {
      if (!s.empty() && s.back().first == l.gen)
        s.back().second += l.sign;
      else
        s.push_back({l.gen, l.sign});
    }
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].rank() != b[i].rank()) return a[i].rank() < b[i].rank();
    return false;
  }

  std::string key() const {
    std::string s;
    s.reserve(v_.size() * 2);
    for (auto& l : v_) {
      s += static_cast<char>(l.gen + 1);
      s += l.sign > 0 ? '+' : '-';
    }
    return s;
  }

 private:
  std::vector<Letter> v_;
};

// reduce a raw sequence (checks generator range)
inline Word reduce(const std::vector<Letter>& raw, int alphabet_size) {
  Word w;
  for (auto& l : raw) {
    if (l.gen < 0 || l.gen >= alphabet_size) throw ParseError("unknown generator index " + std::to_string(l.gen));
    if (l.sign != 1 && l.sign != -1) throw ParseError("letter exponent must be +-1");
    w.push(l);
  }
  return w;
}

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (index_.count(names_[i])) throw ParseError("duplicate generator name " + names_[i]);
      index_[names_[i]] = static_cast<int>(i);
    }
  }

  void alias(const std::string& name, int i) {
    if (index_.count(name)) throw ParseError("duplicate generator name " + name);
    index_[name] = i;
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  int find(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) throw ParseError("unknown generator '" + n + "'");
    return it->second;
  }

  // tokens separated by whitespace: name or name^k
  Word parse(const std::string& text) const {
    std::istringstream in(text);
    std::string tok;
    std::vector<Letter> raw;
    while (in >> tok) {
      std::string nm = tok;
      long e = 1;
      auto c = tok.find('^');
      if (c != std::string::npos) {
        nm = tok.substr(0, c);
        std::string ex = tok.substr(c + 1);
        if (ex.size() > 1 && ex[0] == '(' && ex.back() == ')') ex = ex.substr(1, ex.size() - 2);
        try {
          std::size_t used = 0;
          e = std::stol(ex, &used);
          if (used != ex.size()) throw ParseError("x");
        } catch (...) {
          throw ParseError("bad exponent in token '" + tok + "'");
        }
      }
      int g = find(nm);
      for (long k = 0; k < std::abs(e); ++k) raw.push_back({g, e > 0 ? 1 : -1});
    }
    return reduce(raw, size());
  }

  std::string format(const Word& w) const {
    std::string s;
    for (auto [g, e] : w.syllables()) {
      if (!s.empty()) s += ' ';
      s += name(g);
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

// all reduced words of length <= r, by length then letter rank
inline std::vector<Word> ball(int alphabet_size, int radius) {
  std::vector<Word> out{Word()};
  std::vector<Word> layer{Word()};
  for (int len = 1; len <= radius; ++len) {
    std::vector<Word> next;
    for (auto& w : layer) {
      for (int r = 0; r < 2 * alphabet_size; ++r) {
        Letter l{r / 2, r % 2 ? -1 : 1};
        if (!w.empty() && w.letters().back() == l.inv()) continue;
        Word x = w;
        x.push(l);
        next.push_back(std::move(x));
      }
    }
    // layer is generated in lexicographic order already (prefix order, then letter rank)
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline std::vector<Word> ball(const Alphabet& a, int radius) { return ball(a.size(), radius); }

}  // namespace lorder
