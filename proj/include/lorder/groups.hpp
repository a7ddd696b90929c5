#pragma once

#include "braid.hpp"
#include "pl.hpp"
#include "rational.hpp"
#include "words.hpp"

#include <array>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

namespace lorder {

using IVec = std::vector<long long>;

struct Mat3 {
  std::array<long long, 9> a{};
  long long& operator()(int i, int j) { return a[3 * i + j]; }
  long long operator()(int i, int j) const { return a[3 * i + j]; }
  static Mat3 id() {
    Mat3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1;
    return m;
  }
  friend bool operator==(const Mat3&, const Mat3&) = default;
};

inline long long chk_add(long long x, long long y) {
  long long r;
  if (__builtin_add_overflow(x, y, &r)) throw ComputeError("integer overflow");
  return r;
}
inline long long chk_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r)) throw ComputeError("integer overflow");
  return r;
}

inline Mat3 matmul(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      long long s = 0;
      for (int k = 0; k < 3; ++k) s = chk_add(s, chk_mul(x(i, k), y(k, j)));
      r(i, j) = s;
    }
  return r;
}

// inverse of a determinant-1 integer matrix (adjugate)
inline Mat3 matinv(const Mat3& m) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      r(i, j) = chk_add(chk_mul(m(i1, j1), m(i2, j2)), -chk_mul(m(i1, j2), m(i2, j1)));
    }
  return r;
}

// x -> l^k x + beta
struct Affine {
  long k = 0;
  Q beta = 0;
};

// integer or hatted integer, componentwise
struct Hat {
  long long v = 0;
  bool hat = false;
  friend bool operator==(const Hat&, const Hat&) = default;
};
using Triplet = std::array<Hat, 3>;

inline Hat hat_add(const Hat& m, const Hat& n) {
  if (!m.hat && !n.hat) return {chk_add(m.v, n.v), false};
  if (!m.hat && n.hat) return {chk_add(m.v, n.v), true};
  if (m.hat && !n.hat) return {chk_add(m.v, -n.v), true};
  return {chk_add(m.v, -n.v), false};
}

inline std::string hat_str(const Hat& h) { return std::to_string(h.v) + (h.hat ? "^" : ""); }

inline Hat parse_hat(const std::string& s) {
  std::string t = s;
  bool hat = !t.empty() && t.back() == '^';
  if (hat) t.pop_back();
  try {
    std::size_t used = 0;
    long long v = std::stoll(t, &used);
    if (used != t.size()) throw 0;
    return {v, hat};
  } catch (...) {
    throw ParseError("bad triplet entry '" + s + "'");
  }
}

// Z wr Z: lamp map f (sorted, nonzero values) and cursor t
struct Lamp {
  long long t = 0;
  std::vector<std::pair<long long, long long>> f;
};

// torus-knot amalgam form: Delta^ell times alternating syllables in c (=0) and d (=1)
struct TorusNF {
  long long ell = 0;
  std::vector<std::pair<int, long long>> syl;
};

using Elem = std::variant<Word, IVec, Mat3, Affine, Triplet, Lamp, TorusNF, PLHomeo>;

class Group {
 public:
  virtual ~Group() = default;
  virtual std::string spec() const = 0;
  const Alphabet& alphabet() const { return alpha_; }
  int rank() const { return alpha_.size(); }

  virtual Elem identity() const = 0;
  virtual Elem gen(int i) const = 0;
  virtual Elem mul(const Elem& x, const Elem& y) const = 0;
  virtual Elem inv(const Elem& x) const = 0;
  virtual std::string key(const Elem& x) const = 0;
  virtual std::string show(const Elem& x) const = 0;
  virtual bool is_id(const Elem& x) const { return key(x) == key(identity()); }
  virtual bool equal(const Elem& x, const Elem& y) const { return key(x) == key(y); }
  // explicit torsion-free flag for combinatorics checks
  virtual bool torsion_free() const { return true; }
  virtual bool word_elements() const { return false; }

  virtual Elem eval(const Word& w) const {
    Elem r = identity();
    for (auto& l : w) r = mul(r, l.sign > 0 ? gen(l.gen) : inv(gen(l.gen)));
    return r;
  }
  Elem parse(const std::string& text) const { return eval(alpha_.parse(text)); }
  Elem pow(const Elem& x, long long e) const {
    Elem base = e < 0 ? inv(x) : x, r = identity();
    unsigned long long n = e < 0 ? -static_cast<unsigned long long>(e) : e;
    while (n) {
      if (n & 1) r = mul(r, base);
      n >>= 1;
      if (n) base = mul(base, base);
    }
    return r;
  }
  Elem conj(const Elem& g, const Elem& f) const { return mul(mul(inv(f), g), f); }  // f^-1 g f

 protected:
  Alphabet alpha_;
};

using GroupPtr = std::shared_ptr<const Group>;

// ---------- free groups

class FreeGroup : public Group {
 public:
  explicit FreeGroup(int n) : n_(n) {
    if (n < 1) throw ParseError("free group needs n >= 1");
    std::vector<std::string> nm;
    for (int i = 1; i <= n; ++i) nm.push_back("f" + std::to_string(i));
    alpha_ = Alphabet(nm);
    if (n >= 2) {
      alpha_.alias("f", 0);
      alpha_.alias("g", 1);
      alpha_.alias("a", 0);
      alpha_.alias("b", 1);
    }
  }
  std::string spec() const override { return "free:" + std::to_string(n_); }
  Elem identity() const override { return Word(); }
  Elem gen(int i) const override { return Word::gen(i); }
  Elem mul(const Elem& x, const Elem& y) const override { return std::get<Word>(x) * std::get<Word>(y); }
  Elem inv(const Elem& x) const override { return std::get<Word>(x).inverse(); }
  std::string key(const Elem& x) const override { return std::get<Word>(x).key(); }
  std::string show(const Elem& x) const override { return alpha_.format(std::get<Word>(x)); }
  Elem eval(const Word& w) const override { return w; }
  bool word_elements() const override { return true; }
  int n() const { return n_; }

 private:
  int n_;
};

// ---------- Z^n

class ZnGroup : public Group {
 public:
  explicit ZnGroup(int n) : n_(n) {
    if (n < 1 || n > 26) throw ParseError("zn needs 1 <= n <= 26");
    std::vector<std::string> nm;
    for (int i = 0; i < n; ++i) nm.push_back(std::string(1, static_cast<char>('a' + i)));
    alpha_ = Alphabet(nm);
    for (int i = 0; i < n; ++i) alpha_.alias("e" + std::to_string(i + 1), i);
    if (n == 1) alpha_.alias("g", 0);
  }
  std::string spec() const override { return "zn:" + std::to_string(n_); }
  Elem identity() const override { return IVec(n_, 0); }
  Elem gen(int i) const override {
    IVec v(n_, 0);
    v[i] = 1;
    return v;
  }
  Elem mul(const Elem& x, const Elem& y) const override {
    IVec r = std::get<IVec>(x);
    auto& b = std::get<IVec>(y);
    for (int i = 0; i < n_; ++i) r[i] = chk_add(r[i], b[i]);
    return r;
  }
  Elem inv(const Elem& x) const override {
    IVec r = std::get<IVec>(x);
    for (auto& v : r) v = -v;
    return r;
  }
  std::string key(const Elem& x) const override { return show(x); }
  std::string show(const Elem& x) const override {
    std::string s = "(";
    auto& v = std::get<IVec>(x);
    for (int i = 0; i < n_; ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  }
  int n() const { return n_; }

 private:
  int n_;
};

// ---------- Heisenberg (lower unitriangular) and SL(3,Z)

class MatrixGroup : public Group {
 public:
  Elem identity() const override { return Mat3::id(); }
  Elem gen(int i) const override { return gens_.at(i); }
  Elem mul(const Elem& x, const Elem& y) const override { return matmul(std::get<Mat3>(x), std::get<Mat3>(y)); }
  Elem inv(const Elem& x) const override { return matinv(std::get<Mat3>(x)); }
  std::string key(const Elem& x) const override { return show(x); }
  std::string show(const Elem& x) const override {
    auto& m = std::get<Mat3>(x);
    std::string s = "[";
    for (int i = 0; i < 3; ++i) {
      if (i) s += ";";
      for (int j = 0; j < 3; ++j) s += (j ? " " : "") + std::to_string(m(i, j));
    }
    return s + "]";
  }
  static Mat3 elementary(int i, int j, long long v) {
    Mat3 m = Mat3::id();
    m(i, j) = v;
    return m;
  }

 protected:
  std::vector<Mat3> gens_;
};

class HeisenbergGroup : public MatrixGroup {
 public:
  HeisenbergGroup() {
    alpha_ = Alphabet({"f", "g"});
    gens_ = {elementary(1, 0, 1), elementary(2, 1, 1)};
  }
  std::string spec() const override { return "heisenberg"; }
  // central element I + E31
  Elem h() const { return elementary(2, 0, 1); }
};

class SL3Z : public MatrixGroup {
 public:
  explicit SL3Z(long long k = 1) : k_(k) {
    if (k == 0) throw ParseError("sl3z parameter must be nonzero");
    alpha_ = Alphabet({"g1", "g2", "g3", "g4", "g5", "g6"});
    // g1 = E12, g2 = E13, g3 = E23, g4 = E21, g5 = E31, g6 = E32 (entry k)
    gens_ = {elementary(0, 1, k), elementary(0, 2, k), elementary(1, 2, k),
             elementary(1, 0, k), elementary(2, 0, k), elementary(2, 1, k)};
  }
  std::string spec() const override { return k_ == 1 ? "sl3z" : "sl3z:" + std::to_string(k_); }
  // SL(3,Z) has torsion
  bool torsion_free() const override { return false; }
  long long k() const { return k_; }

 private:
  long long k_;
};

// ---------- braid groups: elements are reduced words, identity via handle reduction

class BraidGroup : public Group {
 public:
  explicit BraidGroup(int n) : n_(n) {
    if (n < 2) throw ParseError("braid group needs n >= 2");
    std::vector<std::string> nm;
    for (int i = 1; i < n; ++i) nm.push_back("s" + std::to_string(i));
    alpha_ = Alphabet(nm);
  }
  std::string spec() const override { return "braid:" + std::to_string(n_); }
  Elem identity() const override { return Word(); }
  Elem gen(int i) const override { return Word::gen(i); }
  Elem mul(const Elem& x, const Elem& y) const override { return std::get<Word>(x) * std::get<Word>(y); }
  Elem inv(const Elem& x) const override { return std::get<Word>(x).inverse(); }
  std::string key(const Elem& x) const override { return artin_key(std::get<Word>(x), n_); }
  std::string show(const Elem& x) const override { return alpha_.format(std::get<Word>(x)); }
  bool is_id(const Elem& x) const override { return handle_reduce(std::get<Word>(x), n_).empty(); }
  bool equal(const Elem& x, const Elem& y) const override { return is_id(mul(inv(x), y)); }
  Elem eval(const Word& w) const override { return w; }
  bool word_elements() const override { return true; }
  int strands() const { return n_; }

 private:
  int n_;
};

// ---------- Tararin groups K_k: a_{i+1}^-1 a_i a_{i+1} = a_i^-1, a_i a_j = a_j a_i for |i-j| > 1
// element n = a_1^{n_1} ... a_k^{n_k}

class TararinGroup : public Group {
 public:
  explicit TararinGroup(int k) : k_(k) {
    if (k < 1) throw ParseError("tararin needs k >= 1");
    std::vector<std::string> nm;
    for (int i = 1; i <= k; ++i) nm.push_back("a" + std::to_string(i));
    alpha_ = Alphabet(nm);
    if (k == 2) {
      alpha_.alias("b", 0);
      alpha_.alias("a", 1);
    }
  }
  std::string spec() const override { return "tararin:" + std::to_string(k_); }
  Elem identity() const override { return IVec(k_, 0); }
  Elem gen(int i) const override {
    IVec v(k_, 0);
    v[i] = 1;
    return v;
  }
  Elem mul(const Elem& x, const Elem& y) const override {
    auto& n = std::get<IVec>(x);
    auto& m = std::get<IVec>(y);
    IVec r(k_);
    for (int i = 0; i < k_; ++i) {
      long long nxt = i + 1 < k_ ? n[i + 1] : 0;
      r[i] = chk_add(n[i], (nxt % 2 ? -1 : 1) * m[i]);
    }
    return r;
  }
  Elem inv(const Elem& x) const override {
    auto& n = std::get<IVec>(x);
    IVec r(k_);
    for (int i = 0; i < k_; ++i) {
      long long nxt = i + 1 < k_ ? n[i + 1] : 0;
      r[i] = (nxt % 2 ? 1 : -1) * n[i];
    }
    return r;
  }
  std::string key(const Elem& x) const override {
    std::string s;
    for (auto v : std::get<IVec>(x)) s += std::to_string(v) + ",";
    return s;
  }
  std::string show(const Elem& x) const override {
    auto& n = std::get<IVec>(x);
    Word w;
    for (int i = 0; i < k_; ++i) w = w * Word::gen(i, static_cast<int>(n[i]));
    std::string s = alpha_.format(w);
    return s.empty() ? "id" : s;
  }
  int k() const { return k_; }

 private:
  int k_;
};

// ---------- BS(1,l) as affine maps; g = x+1, h = l x

class BSGroup : public Group {
 public:
  explicit BSGroup(long l) : l_(l) {
    if (l < 2) throw ParseError("bs needs l >= 2");
    alpha_ = Alphabet({"g", "h"});
    alpha_.alias("b", 0);
    alpha_.alias("a", 1);
  }
  std::string spec() const override { return "bs:" + std::to_string(l_); }
  Elem identity() const override { return Affine{}; }
  Elem gen(int i) const override { return i == 0 ? Affine{0, Q(1)} : Affine{1, Q(0)}; }
  Elem mul(const Elem& x, const Elem& y) const override {
    auto& a = std::get<Affine>(x);
    auto& b = std::get<Affine>(y);
    return Affine{a.k + b.k, qnorm(qpow(Q(l_), a.k) * b.beta + a.beta)};
  }
  Elem inv(const Elem& x) const override {
    auto& a = std::get<Affine>(x);
    return Affine{-a.k, qnorm(-qpow(Q(l_), -a.k) * a.beta)};
  }
  std::string key(const Elem& x) const override {
    auto& a = std::get<Affine>(x);
    return std::to_string(a.k) + ";" + qstr(a.beta);
  }
  std::string show(const Elem& x) const override {
    auto& a = std::get<Affine>(x);
    return "x -> " + std::to_string(l_) + "^" + std::to_string(a.k) + " x + " + qstr(a.beta);
  }
  long l() const { return l_; }
  Q slope(const Elem& x) const { return qpow(Q(l_), std::get<Affine>(x).k); }
  Q apply(const Elem& x, const Q& t) const {
    auto& a = std::get<Affine>(x);
    return qnorm(qpow(Q(l_), a.k) * t + a.beta);
  }

 private:
  long l_;
};

// ---------- torus-knot groups <a,b : (b a^{m-1})^{n-1} b = a>
// as the amalgam <c,d : c^m = d^n> with c = a, d = a^{m-1} b, Delta = c^m central

class TorusGroup : public Group {
 public:
  TorusGroup(int m, int n) : m_(m), n_(n) {
    if (m < 2 || n < 2) throw ParseError("torus needs m,n >= 2");
    alpha_ = Alphabet({"a", "b"});
  }
  std::string spec() const override { return "torus:" + std::to_string(m_) + "," + std::to_string(n_); }
  Elem identity() const override { return TorusNF{}; }
  Elem gen(int i) const override {
    TorusNF r;
    if (i == 0) {
      push(r, 0, 1);
    } else {
      for (int k = 0; k < m_ - 1; ++k) push(r, 0, -1);
      push(r, 1, 1);
    }
    return r;
  }
  Elem mul(const Elem& x, const Elem& y) const override {
    TorusNF r = std::get<TorusNF>(x);
    auto& b = std::get<TorusNF>(y);
    r.ell = chk_add(r.ell, b.ell);
    for (auto [t, e] : b.syl) push(r, t, e);
    return r;
  }
  Elem inv(const Elem& x) const override {
    auto& a = std::get<TorusNF>(x);
    TorusNF r;
    r.ell = -a.ell;
    for (auto it = a.syl.rbegin(); it != a.syl.rend(); ++it) push(r, it->first, -it->second);
    return r;
  }
  std::string key(const Elem& x) const override {
    auto& a = std::get<TorusNF>(x);
    std::string s = std::to_string(a.ell) + ":";
    for (auto [t, e] : a.syl) s += (t ? "d" : "c") + std::to_string(e) + ".";
    return s;
  }
  std::string show(const Elem& x) const override {
    // b^{s0} a^{r1} ... a^{rk + m l} form
    auto w = positive_form(std::get<TorusNF>(x));
    std::string s;
    for (auto [g, e] : w.first) {
      if (!s.empty()) s += ' ';
      s += std::string(g ? "b" : "a") + (e != 1 ? "^" + std::to_string(e) : "");
    }
    if (w.second != 0) s += (s.empty() ? "" : " ") + std::string("a^") + std::to_string(w.second);
    return s.empty() ? "id" : s;
  }
  int m() const { return m_; }
  int n() const { return n_; }

  // Non-negative a,b syllable word u and integer e with (element) = u * a^e,
  // where u is reduced by (b a^{m-1})^{n-1} b -> a and a^m -> Delta until stable.
  std::pair<std::vector<std::pair<int, long long>>, long long> positive_form(const TorusNF& x) const {
    std::vector<std::pair<int, long long>> w;  // (0=a,1=b), positive exponents
    long long tail = chk_mul(m_, x.ell);
    auto app = [&](int g, long long e) {
      if (e == 0) return;
      if (!w.empty() && w.back().first == g)
        w.back().second += e;
      else
        w.push_back({g, e});
    };
    for (auto [t, e] : x.syl) {
      if (t == 0) {
        app(0, e);
      } else {
        for (long long j = 0; j < e; ++j) {
          app(0, m_ - 1);
          app(1, 1);
        }
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      // a^m is central: move to the tail
      for (auto& s : w)
        if (s.first == 0 && s.second >= m_) {
          tail += (s.second / m_) * m_;
          s.second %= m_;
          changed = true;
        }
      std::vector<std::pair<int, long long>> c;
      for (auto& s : w) {
        if (s.second == 0) continue;
        if (!c.empty() && c.back().first == s.first)
          c.back().second += s.second;
        else
          c.push_back(s);
      }
      w = std::move(c);
      // pattern (b a^{m-1})^{n-1} b = b (a^{m-1} b)^{n-1} in syllables
      std::vector<Letter> flat;
      for (auto [g, e] : w)
        for (long long k = 0; k < e; ++k) flat.push_back({g, 1});
      std::vector<Letter> pat;
      for (int k = 0; k < n_ - 1; ++k) {
        pat.push_back({1, 1});
        for (int j = 0; j < m_ - 1; ++j) pat.push_back({0, 1});
      }
      pat.push_back({1, 1});
      auto it = std::search(flat.begin(), flat.end(), pat.begin(), pat.end());
      if (it != flat.end()) {
        std::vector<Letter> nf(flat.begin(), it);
        nf.push_back({0, 1});
        nf.insert(nf.end(), it + pat.size(), flat.end());
        w.clear();
        for (auto& l : nf) app(l.gen, 1);
        changed = true;
      }
    }
    // trailing a-block joins the central tail
    if (!w.empty() && w.back().first == 0) {
      tail += w.back().second;
      w.pop_back();
    }
    return {w, tail};
  }

 private:
  void push(TorusNF& r, int t, long long e) const {
    long long mod = t == 0 ? m_ : n_;
    long long step = e > 0 ? 1 : -1;
    for (long long k = 0; k < std::abs(e); ++k) {
      if (!r.syl.empty() && r.syl.back().first == t) {
        long long& v = r.syl.back().second;
        v += step;
        if (v == mod) {
          r.syl.pop_back();
          r.ell += 1;
        } else if (v == 0) {
          r.syl.pop_back();
        }
      } else if (step > 0) {
        r.syl.push_back({t, 1});
      } else {
        r.ell -= 1;
        if (mod - 1 > 0) r.syl.push_back({t, mod - 1});
      }
    }
  }

  int m_, n_;
};

// ---------- the crystallographic group of triplets, a = (1, 0^, 0^), b = (0^, 1, 1^)

class PromislowGroup : public Group {
 public:
  PromislowGroup() { alpha_ = Alphabet({"a", "b"}); }
  std::string spec() const override { return "promislow"; }
  Elem identity() const override { return Triplet{}; }
  Elem gen(int i) const override {
    if (i == 0) return Triplet{Hat{1, false}, Hat{0, true}, Hat{0, true}};
    return Triplet{Hat{0, true}, Hat{1, false}, Hat{1, true}};
  }
  Elem c() const { return inv(mul(gen(0), gen(1))); }
  Elem mul(const Elem& x, const Elem& y) const override {
    auto& a = std::get<Triplet>(x);
    auto& b = std::get<Triplet>(y);
    return Triplet{hat_add(a[0], b[0]), hat_add(a[1], b[1]), hat_add(a[2], b[2])};
  }
  Elem inv(const Elem& x) const override {
    // m^-1 = -m, (m^)^-1 = m^ since m^ + m^ = 0
    Triplet r = std::get<Triplet>(x);
    for (auto& h : r)
      if (!h.hat) h.v = -h.v;
    return r;
  }
  std::string key(const Elem& x) const override { return show(x); }
  std::string show(const Elem& x) const override {
    auto& a = std::get<Triplet>(x);
    return hat_str(a[0]) + " " + hat_str(a[1]) + " " + hat_str(a[2]);
  }
  static Triplet parse_triplet(const std::string& s) {
    std::istringstream in(s);
    std::string p[3], extra;
    if (!(in >> p[0] >> p[1] >> p[2]) || (in >> extra)) throw ParseError("bad triplet '" + s + "'");
    return Triplet{parse_hat(p[0]), parse_hat(p[1]), parse_hat(p[2])};
  }
};

// ---------- lamplighter-type wreath product Z wr Z; t shifts, a = delta_0

class WreathGroup : public Group {
 public:
  WreathGroup() { alpha_ = Alphabet({"t", "a"}); }
  std::string spec() const override { return "wreath"; }
  Elem identity() const override { return Lamp{}; }
  Elem gen(int i) const override {
    Lamp l;
    if (i == 0)
      l.t = 1;
    else
      l.f = {{0, 1}};
    return l;
  }
  Elem mul(const Elem& x, const Elem& y) const override {
    auto& a = std::get<Lamp>(x);
    auto& b = std::get<Lamp>(y);
    std::map<long long, long long> f(a.f.begin(), a.f.end());
    for (auto [p, v] : b.f) f[chk_add(p, a.t)] += v;
    Lamp r;
    r.t = chk_add(a.t, b.t);
    for (auto [p, v] : f)
      if (v) r.f.push_back({p, v});
    return r;
  }
  Elem inv(const Elem& x) const override {
    // (f,t)^-1 = (-shift_{-t} f, -t)
    auto& a = std::get<Lamp>(x);
    Lamp r;
    r.t = -a.t;
    for (auto [p, v] : a.f) r.f.push_back({p - a.t, -v});
    return r;
  }
  std::string key(const Elem& x) const override { return show(x); }
  std::string show(const Elem& x) const override {
    auto& a = std::get<Lamp>(x);
    std::string s = "t=" + std::to_string(a.t) + " f={";
    for (std::size_t i = 0; i < a.f.size(); ++i)
      s += (i ? "," : "") + std::to_string(a.f[i].first) + ":" + std::to_string(a.f[i].second);
    return s + "}";
  }
};

// ---------- Thompson's group F acting on [0,1]

class ThompsonF : public Group {
 public:
  ThompsonF() {
    alpha_ = Alphabet({"x0", "x1"});
    using P = PLHomeo::Pt;
    gens_.push_back(PLHomeo({P{Q(0), Q(0)}, P{Q(1, 2), Q(1, 4)}, P{Q(3, 4), Q(1, 2)}, P{Q(1), Q(1)}}));
    gens_.push_back(PLHomeo({P{Q(0), Q(0)}, P{Q(1, 2), Q(1, 2)}, P{Q(3, 4), Q(5, 8)}, P{Q(7, 8), Q(3, 4)},
                             P{Q(1), Q(1)}}));
  }
  std::string spec() const override { return "thompsonF"; }
  Elem identity() const override { return PLHomeo(); }
  Elem gen(int i) const override { return gens_.at(i); }
  Elem mul(const Elem& x, const Elem& y) const override { return compose(std::get<PLHomeo>(x), std::get<PLHomeo>(y)); }
  Elem inv(const Elem& x) const override { return std::get<PLHomeo>(x).inverse(); }
  std::string key(const Elem& x) const override { return std::get<PLHomeo>(x).key(); }
  std::string show(const Elem& x) const override { return std::get<PLHomeo>(x).str(); }

 private:
  std::vector<PLHomeo> gens_;
};

// ---------- spec strings

inline std::vector<long> parse_params(const std::string& s) {
  std::vector<long> out;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      try {
        std::size_t used = 0;
        out.push_back(std::stol(cur, &used));
        if (used != cur.size()) throw 0;
      } catch (...) {
        throw ParseError("bad group parameter '" + cur + "'");
      }
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

inline GroupPtr make_group(const std::string& spec) {
  auto colon = spec.find(':');
  std::string fam = spec.substr(0, colon);
  std::vector<long> p;
  if (colon != std::string::npos) p = parse_params(spec.substr(colon + 1));
  auto need = [&](std::size_t k) {
    if (p.size() != k) throw ParseError("group '" + fam + "' expects " + std::to_string(k) + " parameter(s)");
  };
  if (fam == "free") { need(1); return std::make_shared<FreeGroup>(p[0]); }
  if (fam == "zn") { need(1); return std::make_shared<ZnGroup>(p[0]); }
  if (fam == "heisenberg") { need(0); return std::make_shared<HeisenbergGroup>(); }
  if (fam == "braid") { need(1); return std::make_shared<BraidGroup>(p[0]); }
  if (fam == "tararin") { need(1); return std::make_shared<TararinGroup>(p[0]); }
  if (fam == "bs") { need(1); return std::make_shared<BSGroup>(p[0]); }
  if (fam == "torus") { need(2); return std::make_shared<TorusGroup>(p[0], p[1]); }
  if (fam == "promislow") { need(0); return std::make_shared<PromislowGroup>(); }
  if (fam == "wreath") { need(0); return std::make_shared<WreathGroup>(); }
  if (fam == "thompsonF") { need(0); return std::make_shared<ThompsonF>(); }
  if (fam == "sl3z") {
    if (p.empty()) return std::make_shared<SL3Z>(1);
    need(1);
    return std::make_shared<SL3Z>(p[0]);
  }
  throw ParseError("unknown group family '" + fam + "'");
}

inline bool verify_relation(const Group& G, const std::string& lhs, const std::string& rhs) {
  return G.equal(G.parse(lhs), G.parse(rhs));
}

// ---------- balls of group elements

struct BallElem {
  Word word;  // shortlex-least representative
  Elem elem;
  std::string key;
  int length;
};

// distinct elements of word length <= r, in order of their shortlex least word
inline std::vector<BallElem> element_ball(const Group& G, int radius) {
  std::vector<BallElem> out;
  std::unordered_set<std::string> seen;
  for (auto& w : ball(G.rank(), radius)) {
    Elem e = G.eval(w);
    std::string k = G.key(e);
    if (!seen.insert(k).second) continue;
    out.push_back({w, std::move(e), std::move(k), static_cast<int>(w.size())});
  }
  return out;
}

}  // namespace lorder
