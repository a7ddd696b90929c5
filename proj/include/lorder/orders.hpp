#pragma once

#include "braid.hpp"
#include "groups.hpp"
#include "rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lorder {

class Oracle {
 public:
  explicit Oracle(GroupPtr g) : g_(std::move(g)) {}
  virtual ~Oracle() = default;
  virtual int sign(const Elem& x) const = 0;
  virtual std::string name() const = 0;
  virtual bool bi_order() const { return false; }

  const Group& group() const { return *g_; }
  GroupPtr group_ptr() const { return g_; }
  int sign_word(const Word& w) const { return sign(g_->eval(w)); }
  // x < y  iff  x^-1 y positive
  virtual bool less(const Elem& x, const Elem& y) const { return sign(g_->mul(g_->inv(x), y)) > 0; }
  int cmp(const Elem& x, const Elem& y) const { return -sign(g_->mul(g_->inv(x), y)); }

 protected:
  GroupPtr g_;
};

using OraclePtr = std::shared_ptr<const Oracle>;

template <class T>
const T& group_as(const Group& g, const char* what) {
  auto p = dynamic_cast<const T*>(&g);
  if (!p) throw ParseError(std::string("oracle ") + what + " does not apply to group " + g.spec());
  return *p;
}

// ---------- braids

class DehornoyOracle : public Oracle {
 public:
  explicit DehornoyOracle(GroupPtr g) : Oracle(g), n_(group_as<BraidGroup>(*g, "dehornoy").strands()) {}
  int sign(const Elem& x) const override {
    return main_index(handle_reduce(std::get<Word>(x), n_)).sign;
  }
  std::string name() const override { return "dehornoy"; }

 protected:
  int n_;
};

// Dubrovina-Dubrovin: Dehornoy sign flipped by the parity of the main index
class DDOracle : public DehornoyOracle {
 public:
  explicit DDOracle(GroupPtr g) : DehornoyOracle(g) {}
  int sign(const Elem& x) const override {
    auto m = main_index(handle_reduce(std::get<Word>(x), n_));
    return m.index % 2 ? -m.sign : m.sign;
  }
  std::string name() const override { return "dd"; }
};

// ---------- Magnus expansion f_i -> 1 + X_i, truncated noncommutative polynomials

struct NCPoly {
  int nvars = 2;
  int D = 1;
  // c[d][idx]: coefficient of the degree-d monomial whose letters are the base-nvars digits of idx
  std::vector<std::vector<long long>> c;

  static NCPoly one(int nvars, int D) {
    NCPoly p;
    p.nvars = nvars;
    p.D = D;
    std::size_t sz = 1;
    for (int d = 0; d <= D; ++d) {
      p.c.emplace_back(sz, 0);
      if (d < D) {
        if (sz > (std::size_t{1} << 24) / nvars) throw ComputeError("Magnus truncation too large");
        sz *= nvars;
      }
    }
    p.c[0][0] = 1;
    return p;
  }

  // right multiplication by (1 + X_i)^{s}
  void mul_gen(int i, int s) {
    if (s > 0) {
      for (int d = D; d >= 1; --d) {
        auto& cur = c[d];
        auto& prev = c[d - 1];
        for (std::size_t k = 0; k < prev.size(); ++k)
          if (prev[k]) cur[k * nvars + i] = chk_add(cur[k * nvars + i], prev[k]);
      }
    } else {
      // Q (1 + X_i) = P, so Q_d = P_d - Q_{d-1} X_i
      for (int d = 1; d <= D; ++d) {
        auto& cur = c[d];
        auto& prev = c[d - 1];
        for (std::size_t k = 0; k < prev.size(); ++k)
          if (prev[k]) cur[k * nvars + i] = chk_add(cur[k * nvars + i], -prev[k]);
      }
    }
  }

  long long coef(const std::vector<int>& mono) const {
    std::size_t idx = 0;
    for (int l : mono) idx = idx * nvars + l;
    return c.at(mono.size()).at(idx);
  }

  std::string str() const {
    static const char* xy = "XYZW";
    std::string s;
    for (int d = 0; d <= D; ++d) {
      for (std::size_t k = 0; k < c[d].size(); ++k) {
        long long v = c[d][k];
        if (!v) continue;
        std::string mono;
        std::size_t t = k;
        std::vector<int> digs(d);
        for (int j = d - 1; j >= 0; --j) {
          digs[j] = static_cast<int>(t % nvars);
          t /= nvars;
        }
        for (int g : digs) mono += nvars <= 4 ? std::string(1, xy[g]) : "X" + std::to_string(g + 1);
        std::string term;
        if (mono.empty())
          term = std::to_string(std::llabs(v));
        else
          term = (std::llabs(v) == 1 ? "" : std::to_string(std::llabs(v))) + mono;
        if (s.empty())
          s = (v < 0 ? "-" : "") + term;
        else
          s += (v < 0 ? " - " : " + ") + term;
      }
    }
    return s.empty() ? "0" : s;
  }
};

inline NCPoly magnus_expand(const Word& w, int D, int nvars = 2) {
  if (D < 0) throw ParseError("degree must be >= 0");
  NCPoly p = NCPoly::one(nvars, D);
  for (auto& l : w) {
    if (l.gen >= nvars) throw ParseError("letter outside Magnus alphabet");
    p.mul_gen(l.gen, l.sign);
  }
  return p;
}

// first nonzero coefficient of Phi(w) - 1, graded then lexicographic with X1 < X2 < ...
struct MagnusLead {
  int sign = 0;
  int degree = 0;
  std::vector<int> monomial;
};

inline MagnusLead magnus_lead(const Word& w, int nvars) {
  MagnusLead r;
  if (w.empty()) return r;
  int L = static_cast<int>(w.size());
  for (int D = 1; D <= L; ++D) {
    NCPoly p = magnus_expand(w, D, nvars);
    auto& top = p.c[D];
    for (std::size_t k = 0; k < top.size(); ++k)
      if (top[k]) {
        r.sign = top[k] > 0 ? 1 : -1;
        r.degree = D;
        std::size_t t = k;
        r.monomial.assign(D, 0);
        for (int j = D - 1; j >= 0; --j) {
          r.monomial[j] = static_cast<int>(t % nvars);
          t /= nvars;
        }
        return r;
      }
  }
  throw ComputeError("Magnus expansion vanished through word length");
}

class MagnusOracle : public Oracle {
 public:
  explicit MagnusOracle(GroupPtr g) : Oracle(g), n_(group_as<FreeGroup>(*g, "magnus").n()) {}
  int sign(const Elem& x) const override { return magnus_lead(std::get<Word>(x), n_).sign; }
  std::string name() const override { return "magnus"; }
  bool bi_order() const override { return true; }

 private:
  int n_;
};

// ---------- Sunic order on free groups

inline Q sunic_phi(const Word& w) {
  if (w.empty()) return Q(0);
  long long plus = 0, minus = 0;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    const Letter& x = w[p];
    const Letter& y = w[p + 1];
    if (x.sign > 0 && y.sign < 0 && x.gen > y.gen) ++plus;   // f_j f_i^-1, j > i
    if (x.sign < 0 && y.sign > 0 && x.gen > y.gen) ++minus;  // f_j^-1 f_i, j > i
  }
  Q r = qll(plus - minus) + Q(w[w.size() - 1].sign, 2);
  return qnorm(r);
}

class SunicOracle : public Oracle {
 public:
  explicit SunicOracle(GroupPtr g) : Oracle(g) { group_as<FreeGroup>(*g, "sunic"); }
  int sign(const Elem& x) const override { return lorder::sgn(sunic_phi(std::get<Word>(x))); }
  std::string name() const override { return "sunic"; }
};

// ---------- Vinogradov bi-order on free(n) seen as the free product of the cyclic factors <f_i>.
// Factor order is declaration order; nested factors h<f>h^-1 are ordered by the Magnus order on h.

class VinogradovOracle : public Oracle {
 public:
  explicit VinogradovOracle(GroupPtr g) : Oracle(g), n_(group_as<FreeGroup>(*g, "vinogradov").n()) {}
  std::string name() const override { return "vinogradov"; }
  bool bi_order() const override { return true; }

  int sign(const Elem& x) const override {
    const Word& w = std::get<Word>(x);
    if (w.empty()) return 0;
    Level top;
    for (int i = 0; i < n_; ++i) {
      top.gen.push_back(Word::gen(i));
      top.rank.push_back(i);
    }
    std::vector<Syl> s;
    for (auto [gi, e] : w.syllables()) s.push_back({gi, e});
    return sign_in(top, s);
  }

 private:
  struct Syl {
    int fac;
    long e;
  };
  struct Level {
    std::vector<Word> gen;  // factor generators as words of free(n)
    std::vector<int> rank;  // position in the factor order
  };

  static std::vector<Syl> merge(const std::vector<Syl>& in) {
    std::vector<Syl> out;
    for (auto& s : in) {
      if (s.e == 0) continue;
      if (!out.empty() && out.back().fac == s.fac) {
        out.back().e += s.e;
        if (out.back().e == 0) out.pop_back();
      } else {
        out.push_back(s);
      }
    }
    return out;
  }

  int sign_in(const Level& L, const std::vector<Syl>& f) const {
    if (f.empty()) return 0;
    if (f.size() == 1) return f[0].e > 0 ? 1 : -1;
    int lam = f[0].fac;
    for (auto& s : f)
      if (L.rank[s.fac] < L.rank[lam]) lam = s.fac;
    std::vector<Syl> h;
    for (auto& s : f)
      if (s.fac != lam) h.push_back(s);
    h = merge(h);
    if (!h.empty()) return sign_in(L, h);
    // f = prod_i C_i^-1 g_i C_i with C_i = h_{i+1} ... h_k
    std::vector<std::pair<Word, long>> terms;
    Word suffix;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
      if (it->fac == lam)
        terms.push_back({suffix, it->e});
      else
        suffix = L.gen[it->fac].pow(it->e) * suffix;
    }
    std::reverse(terms.begin(), terms.end());
    Level N;
    std::vector<Word> conj;
    std::vector<Syl> s;
    std::map<std::string, int> idx;
    for (auto& [C, e] : terms) {
      auto k = C.key();
      auto found = idx.find(k);
      int id;
      if (found == idx.end()) {
        id = static_cast<int>(conj.size());
        idx[k] = id;
        conj.push_back(C);
        N.gen.push_back(C.inverse() * L.gen[lam] * C);
      } else {
        id = found->second;
      }
      s.push_back({id, e});
    }
    // rank conjugators h = C^-1 by the Magnus order
    std::vector<int> ord(conj.size());
    for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = static_cast<int>(i);
    std::sort(ord.begin(), ord.end(), [&](int a, int b) {
      Word d = conj[a] * conj[b].inverse();  // (C_a^-1)^-1 C_b^-1
      return magnus_lead(d, n_).sign > 0;
    });
    N.rank.assign(conj.size(), 0);
    for (std::size_t r = 0; r < ord.size(); ++r) N.rank[ord[r]] = static_cast<int>(r);
    return sign_in(N, merge(s));
  }

  int n_;
};

// ---------- affine groups

class SmirnovOracle : public Oracle {
 public:
  SmirnovOracle(GroupPtr g, Quad eps) : Oracle(g), eps_(std::move(eps)) {
    group_as<BSGroup>(*g, "smirnov");
    if (!eps_.irrational()) throw ParseError("smirnov needs an irrational epsilon");
  }
  // f(x) = u x + v is positive iff u + v eps > 1
  int sign(const Elem& x) const override {
    auto& B = static_cast<const BSGroup&>(*g_);
    Q u = B.slope(x);
    const Q& v = std::get<Affine>(x).beta;
    return (Quad(u - 1) + Quad(v) * eps_).sign();
  }
  std::string name() const override { return "smirnov:eps=" + eps_.str(); }
  const Quad& eps() const { return eps_; }

 private:
  Quad eps_;
};

// ---------- Tararin groups: the highest nonzero exponent decides, weighted by signs

class TararinOracle : public Oracle {
 public:
  TararinOracle(GroupPtr g, std::vector<int> signs) : Oracle(g), s_(std::move(signs)) {
    auto& T = group_as<TararinGroup>(*g, "tararin");
    if (static_cast<int>(s_.size()) != T.k()) throw ParseError("tararin needs one sign per generator");
  }
  int sign(const Elem& x) const override {
    auto& v = std::get<IVec>(x);
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
      if (v[i]) return s_[i] * (v[i] > 0 ? 1 : -1);
    return 0;
  }
  std::string name() const override {
    std::string s = "tararin:";
    for (int x : s_) s += x > 0 ? '+' : '-';
    return s;
  }
  bool bi_order() const override { return s_.size() == 1; }

 private:
  std::vector<int> s_;
};

// ---------- Z^n

class LexOracle : public Oracle {
 public:
  explicit LexOracle(GroupPtr g) : Oracle(g) { group_as<ZnGroup>(*g, "lex"); }
  int sign(const Elem& x) const override {
    for (auto v : std::get<IVec>(x))
      if (v) return v > 0 ? 1 : -1;
    return 0;
  }
  std::string name() const override { return "lex"; }
  bool bi_order() const override { return true; }
};

// (m, n) positive iff lambda m + n > 0
class Z2Oracle : public Oracle {
 public:
  Z2Oracle(GroupPtr g, Quad lambda) : Oracle(g), lam_(std::move(lambda)) {
    if (group_as<ZnGroup>(*g, "z2").n() != 2) throw ParseError("z2 needs zn:2");
    if (!lam_.irrational()) throw ParseError("z2 needs an irrational lambda (use z2rational)");
  }
  int sign(const Elem& x) const override {
    auto& v = std::get<IVec>(x);
    return (lam_ * Quad(qll(v[0])) + Quad(qll(v[1]))).sign();
  }
  std::string name() const override { return "z2:lambda=" + lam_.str(); }
  bool bi_order() const override { return true; }
  const Quad& lambda() const { return lam_; }

 private:
  Quad lam_;
};

// x m + y n > 0, ties on the kernel line broken by subsign along (-y, x)
class Z2RationalOracle : public Oracle {
 public:
  Z2RationalOracle(GroupPtr g, Q x, Q y, int subsign) : Oracle(g), x_(x), y_(y), sub_(subsign) {
    if (group_as<ZnGroup>(*g, "z2rational").n() != 2) throw ParseError("z2rational needs zn:2");
    if (x == 0 && y == 0) throw ParseError("z2rational needs a nonzero direction");
    if (subsign != 1 && subsign != -1) throw ParseError("subsign must be +-1");
  }
  int sign(const Elem& e) const override {
    auto& v = std::get<IVec>(e);
    int s = lorder::sgn(Q(x_ * qll(v[0]) + y_ * qll(v[1])));
    if (s) return s;
    return sub_ * lorder::sgn(Q(-y_ * qll(v[0]) + x_ * qll(v[1])));
  }
  std::string name() const override {
    return "z2rational:x=" + qstr(x_) + ",y=" + qstr(y_) + ",sub=" + (sub_ > 0 ? "+" : "-");
  }
  bool bi_order() const override { return true; }

 private:
  Q x_, y_;
  int sub_;
};

// ---------- torus-knot groups: cone <a,b>+

class TorusOracle : public Oracle {
 public:
  explicit TorusOracle(GroupPtr g) : Oracle(g) { group_as<TorusGroup>(*g, "torus"); }
  int sign(const Elem& x) const override {
    auto& T = static_cast<const TorusGroup&>(*g_);
    auto [u, tail] = T.positive_form(std::get<TorusNF>(x));
    if (u.empty() && tail == 0) return 0;
    return tail >= 0 ? 1 : -1;
  }
  std::string name() const override { return "torus"; }
};

// ---------- Thompson's F: lateral derivatives at the ends of the support

class ThompsonOracle : public Oracle {
 public:
  enum Kind { MinusPlus, MinusMinus, PlusPlus, PlusMinus };
  ThompsonOracle(GroupPtr g, Kind k) : Oracle(g), k_(k) { group_as<ThompsonF>(*g, "thompson"); }
  int sign(const Elem& x) const override {
    auto& f = std::get<PLHomeo>(x);
    auto bp = f.breakpoints();
    if (bp.empty()) return 0;
    if (k_ == MinusPlus || k_ == MinusMinus) {
      Q d = f.right_deriv(bp.front());
      int s = d > 1 ? 1 : -1;
      return k_ == MinusPlus ? s : -s;
    }
    Q d = f.left_deriv(bp.back());
    int s = d < 1 ? 1 : -1;
    return k_ == PlusPlus ? s : -s;
  }
  // x^-1 y moves first (last) where x and y part, with slope ratio y'/x'; no composition needed
  bool less(const Elem& x, const Elem& y) const override {
    auto& f = std::get<PLHomeo>(x);
    auto& h = std::get<PLHomeo>(y);
    std::vector<Q> pts;
    for (auto& p : f.points()) pts.push_back(p.x);
    for (auto& p : h.points()) pts.push_back(p.x);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (k_ == MinusPlus || k_ == MinusMinus) {
      for (auto& t : pts) {
        Q df = f.right_deriv(t), dh = h.right_deriv(t);
        if (df != dh) return (dh > df) == (k_ == MinusPlus);
      }
      return false;
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
      Q df = f.left_deriv(*it), dh = h.left_deriv(*it);
      if (df != dh) return (dh < df) == (k_ == PlusPlus);
    }
    return false;
  }
  std::string name() const override {
    static const char* nm[] = {"xminus+", "xminus-", "xplus+", "xplus-"};
    return std::string("thompson:") + nm[k_];
  }
  bool bi_order() const override { return true; }

 private:
  Kind k_;
};

// ---------- dynamically-lexicographic orders from an action by PL maps

inline PLHomeo act_of(const Group& G, const std::vector<PLHomeo>& gens, const Elem& x) {
  if (auto w = std::get_if<Word>(&x)) {
    PLHomeo r;
    for (auto& l : *w) {
      if (l.gen >= static_cast<int>(gens.size())) throw ComputeError("action has too few generators");
      r = compose(r, l.sign > 0 ? gens[l.gen] : gens[l.gen].inverse());
    }
    return r;
  }
  if (auto p = std::get_if<PLHomeo>(&x)) return *p;
  if (auto a = std::get_if<Affine>(&x)) {
    auto& B = dynamic_cast<const BSGroup&>(G);
    return PLHomeo::affine(B.slope(x), a->beta);
  }
  throw ComputeError("dynlex needs word, affine or PL elements");
}

class DynLexOracle : public Oracle {
 public:
  DynLexOracle(GroupPtr g, std::vector<PLHomeo> gens, std::vector<Q> points, std::vector<int> marks)
      : Oracle(g), gens_(std::move(gens)), pts_(std::move(points)), marks_(std::move(marks)) {
    if (marks_.empty()) marks_.assign(pts_.size(), 1);
    if (marks_.size() != pts_.size()) throw ParseError("dynlex needs one mark per point");
    if (pts_.empty()) throw ParseError("dynlex needs comparison points");
  }
  int sign(const Elem& x) const override {
    if (group().is_id(x)) return 0;
    PLHomeo f = act_of(group(), gens_, x);
    for (std::size_t k = 0; k < pts_.size(); ++k) {
      Q y = f(pts_[k]);
      if (y != pts_[k]) return (y > pts_[k] ? 1 : -1) * marks_[k];
    }
    throw ComputeError("dynlex: nontrivial element fixes all comparison points");
  }
  std::string name() const override { return "dynlex"; }
  const std::vector<PLHomeo>& gens() const { return gens_; }

 private:
  std::vector<PLHomeo> gens_;
  std::vector<Q> pts_;
  std::vector<int> marks_;
};

// ---------- combinators

using Membership = std::function<bool(const Elem&)>;

class ReverseOracle : public Oracle {
 public:
  explicit ReverseOracle(OraclePtr o) : Oracle(o->group_ptr()), o_(std::move(o)) {}
  int sign(const Elem& x) const override { return -o_->sign(x); }
  bool less(const Elem& x, const Elem& y) const override { return o_->less(y, x); }
  std::string name() const override { return "reverse(" + o_->name() + ")"; }
  bool bi_order() const override { return o_->bi_order(); }

 private:
  OraclePtr o_;
};

// cone f P f^-1: sign(g) = base sign of f^-1 g f
class ConjugateOracle : public Oracle {
 public:
  ConjugateOracle(OraclePtr o, Elem f) : Oracle(o->group_ptr()), o_(std::move(o)), f_(std::move(f)) {}
  int sign(const Elem& x) const override { return o_->sign(g_->conj(x, f_)); }
  std::string name() const override { return "conjugate(" + o_->name() + "," + g_->show(f_) + ")"; }
  bool bi_order() const override { return o_->bi_order(); }

 private:
  OraclePtr o_;
  Elem f_;
};

// (P \ H) u P_inner on H
class ExtendOracle : public Oracle {
 public:
  ExtendOracle(OraclePtr base, Membership in_h, OraclePtr inner, std::string label)
      : Oracle(base->group_ptr()), base_(std::move(base)), in_(std::move(in_h)), inner_(std::move(inner)),
        label_(std::move(label)) {}
  int sign(const Elem& x) const override { return in_(x) ? inner_->sign(x) : base_->sign(x); }
  std::string name() const override { return label_; }

 private:
  OraclePtr base_;
  Membership in_;
  OraclePtr inner_;
  std::string label_;
};

struct ConvexityWitness {
  Word low, mid, high;  // low < mid < high, low and high in H, mid not
};

// H convex on the ball: any g with id < g < h for positive h in H lies in H
inline std::optional<ConvexityWitness> convexity_violation(const Oracle& o, const Membership& in_h,
                                                           const std::vector<BallElem>& B) {
  const Group& G = o.group();
  std::vector<const BallElem*> pos_h, pos_out;
  for (auto& b : B) {
    if (G.is_id(b.elem) || o.sign(b.elem) <= 0) continue;
    (in_h(b.elem) ? pos_h : pos_out).push_back(&b);
  }
  for (auto* h : pos_h)
    for (auto* g : pos_out)
      if (o.less(g->elem, h->elem)) return ConvexityWitness{Word(), g->word, h->word};
  return std::nullopt;
}

inline OraclePtr flip_oracle(OraclePtr base, Membership in_h, const std::vector<BallElem>* check_ball,
                             const std::string& hname) {
  if (check_ball) {
    auto w = convexity_violation(*base, in_h, *check_ball);
    if (w) {
      auto& A = base->group().alphabet();
      throw ComputeError("subgroup " + hname + " is not convex: id < " + A.format(w->mid) + " < " +
                         A.format(w->high));
    }
  }
  return std::make_shared<ExtendOracle>(base, in_h, std::make_shared<ReverseOracle>(base),
                                        "flip(" + base->name() + "," + hname + ")");
}

inline OraclePtr convex_extend(OraclePtr base, Membership in_h, OraclePtr inner,
                               const std::vector<BallElem>* check_ball, const std::string& hname) {
  if (check_ball) {
    auto w = convexity_violation(*base, in_h, *check_ball);
    if (w) {
      auto& A = base->group().alphabet();
      throw ComputeError("subgroup " + hname + " is not convex: id < " + A.format(w->mid) + " < " +
                         A.format(w->high));
    }
  }
  std::string lbl = "extend(" + base->name() + "," + hname + "," + inner->name() + ")";
  return std::make_shared<ExtendOracle>(base, in_h, inner, lbl);
}

// <s_j, s_{j+1}, ...> in B_n (0-based j): identity or main index >= j
inline Membership braid_tail_subgroup(int strands, int j) {
  return [strands, j](const Elem& x) {
    auto m = main_index(handle_reduce(std::get<Word>(x), strands));
    return m.index < 0 || m.index >= j;
  };
}

// ---------- spec strings

inline std::map<std::string, std::string> parse_kv(const std::string& s) {
  std::map<std::string, std::string> kv;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    auto eq = cur.find('=');
    if (eq == std::string::npos)
      kv[cur] = "";
    else
      kv[cur.substr(0, eq)] = cur.substr(eq + 1);
    cur.clear();
  };
  for (char c : s) {
    if (c == ';') flush();
    else cur += c;
  }
  flush();
  return kv;
}

inline ThompsonOracle::Kind thompson_kind(const std::string& s) {
  if (s == "xminus+" || s == "x-+") return ThompsonOracle::MinusPlus;
  if (s == "xminus-" || s == "x--") return ThompsonOracle::MinusMinus;
  if (s == "xplus+" || s == "x++") return ThompsonOracle::PlusPlus;
  if (s == "xplus-" || s == "x+-") return ThompsonOracle::PlusMinus;
  throw ParseError("unknown thompson order '" + s + "'");
}

// loader for dynlex files, supplied by the io layer
using DynLexLoader = std::function<OraclePtr(GroupPtr, const std::string&)>;

inline DynLexLoader& dynlex_loader() {
  static DynLexLoader f;
  return f;
}

inline OraclePtr make_oracle(GroupPtr g, const std::string& spec) {
  if (spec.rfind("reverse(", 0) == 0 && spec.back() == ')')
    return std::make_shared<ReverseOracle>(make_oracle(g, spec.substr(8, spec.size() - 9)));
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto kv = parse_kv(arg);
  if (kind == "dehornoy") return std::make_shared<DehornoyOracle>(g);
  if (kind == "dd") return std::make_shared<DDOracle>(g);
  if (kind == "magnus") return std::make_shared<MagnusOracle>(g);
  if (kind == "sunic") return std::make_shared<SunicOracle>(g);
  if (kind == "vinogradov") return std::make_shared<VinogradovOracle>(g);
  if (kind == "torus") return std::make_shared<TorusOracle>(g);
  if (kind == "lex") return std::make_shared<LexOracle>(g);
  if (kind == "smirnov") {
    if (!kv.count("eps")) throw ParseError("smirnov needs eps=...");
    return std::make_shared<SmirnovOracle>(g, parse_quad(kv["eps"]));
  }
  if (kind == "z2") {
    if (!kv.count("lambda")) throw ParseError("z2 needs lambda=...");
    return std::make_shared<Z2Oracle>(g, parse_quad(kv["lambda"]));
  }
  if (kind == "z2rational") {
    int sub = 1;
    if (kv.count("sub")) sub = kv["sub"] == "-" ? -1 : 1;
    if (!kv.count("x") || !kv.count("y")) throw ParseError("z2rational needs x=..;y=..");
    return std::make_shared<Z2RationalOracle>(g, parse_q(kv["x"]), parse_q(kv["y"]), sub);
  }
  if (kind == "tararin") {
    std::vector<int> s;
    for (char c : arg) {
      if (c == '+') s.push_back(1);
      else if (c == '-') s.push_back(-1);
      else throw ParseError("tararin signs must be + or -");
    }
    return std::make_shared<TararinOracle>(g, s);
  }
  if (kind == "thompson") return std::make_shared<ThompsonOracle>(g, thompson_kind(arg));
  if (kind == "dynlex") {
    if (!kv.count("file")) throw ParseError("dynlex needs file=...");
    if (!dynlex_loader()) throw ParseError("dynlex loader unavailable");
    return dynlex_loader()(g, kv["file"]);
  }
  throw ParseError("unknown oracle '" + spec + "'");
}

}  // namespace lorder
