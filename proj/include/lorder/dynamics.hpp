#pragma once

#include "groups.hpp"
#include "order_space.hpp"
#include "orders.hpp"
#include "pl.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lorder {

// ---------- dynamical realization

struct Realization {
  std::vector<Elem> elems;    // enumeration, identity first
  std::vector<std::string> keys;
  std::vector<std::string> labels;
  std::vector<Q> t;
  std::vector<PLHomeo> gens;  // one map per generator
  std::vector<std::vector<std::pair<int, int>>> pairs;  // per generator: (h, g_k h) enumeration indices
};

// t(g_0) = 0; new point at max+1, min-1, or the midpoint of its neighbours
inline Realization realize(const Oracle& o, const std::vector<Elem>& enumeration) {
  const Group& G = o.group();
  if (enumeration.empty() || !G.is_id(enumeration[0])) throw ComputeError("enumeration must start at the identity");
  Realization R;
  std::vector<int> sorted;  // enumeration indices in increasing order
  for (std::size_t i = 0; i < enumeration.size(); ++i) {
    const Elem& g = enumeration[i];
    std::string k = G.key(g);
    if (std::find(R.keys.begin(), R.keys.end(), k) != R.keys.end()) throw ComputeError("repeated element in enumeration");
    R.elems.push_back(g);
    R.keys.push_back(k);
    R.labels.push_back(G.show(g));
    if (i == 0) {
      R.t.push_back(Q(0));
      sorted.push_back(0);
      continue;
    }
    // first position whose element is greater than g
    std::size_t lo = 0, hi = sorted.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (o.less(g, R.elems[sorted[mid]]))
        hi = mid;
      else
        lo = mid + 1;
    }
    Q tv;
    if (lo == sorted.size())
      tv = R.t[sorted.back()] + 1;
    else if (lo == 0)
      tv = R.t[sorted.front()] - 1;
    else
      tv = qnorm((R.t[sorted[lo - 1]] + R.t[sorted[lo]]) / 2);
    R.t.push_back(tv);
    sorted.insert(sorted.begin() + lo, static_cast<int>(i));
  }
  std::unordered_map<std::string, int> at;
  for (std::size_t i = 0; i < R.keys.size(); ++i) at[R.keys[i]] = static_cast<int>(i);
  for (int k = 0; k < G.rank(); ++k) {
    std::vector<PLHomeo::Pt> pts;
    std::vector<std::pair<int, int>> pr;
    Elem gk = G.gen(k);
    for (std::size_t i = 0; i < R.elems.size(); ++i) {
      auto it = at.find(G.key(G.mul(gk, R.elems[i])));
      if (it == at.end()) continue;
      pts.push_back({R.t[i], R.t[it->second]});
      pr.push_back({static_cast<int>(i), it->second});
    }
    R.gens.push_back(pl_through(pts));
    R.pairs.push_back(std::move(pr));
  }
  return R;
}

inline Realization realize_words(const Oracle& o, const std::vector<Word>& words) {
  std::vector<Elem> es;
  for (auto& w : words) es.push_back(o.group().eval(w));
  Realization R = realize(o, es);
  for (std::size_t i = 0; i < words.size(); ++i) R.labels[i] = o.group().alphabet().format(words[i]);
  return R;
}

// first `count` elements of the ball enumeration (identity first)
inline Realization realize(const Oracle& o, int count) {
  if (count < 1) throw ComputeError("realize needs count >= 1");
  int r = 0;
  std::vector<BallElem> B;
  while (static_cast<int>((B = element_ball(o.group(), r)).size()) < count) {
    if (++r > 12) break;
  }
  std::vector<Word> ws;
  for (int i = 0; i < count && i < static_cast<int>(B.size()); ++i) ws.push_back(B[i].word);
  return realize_words(o, ws);
}

struct RealizationCheck {
  bool signs_ok = true;
  bool injective = true;
  bool equivariant = true;
  std::string detail;
};

inline RealizationCheck check_realization(const Oracle& o, const Realization& R) {
  RealizationCheck c;
  for (std::size_t i = 0; i < R.elems.size(); ++i)
    if (o.sign(R.elems[i]) != lorder::sgn(R.t[i])) {
      c.signs_ok = false;
      c.detail = "sign mismatch at " + o.group().show(R.elems[i]);
    }
  std::vector<Q> ts = R.t;
  std::sort(ts.begin(), ts.end());
  if (std::adjacent_find(ts.begin(), ts.end()) != ts.end()) c.injective = false;
  for (std::size_t k = 0; k < R.gens.size(); ++k)
    for (auto [h, gh] : R.pairs[k])
      if (R.gens[k](R.t[h]) != R.t[gh]) {
        c.equivariant = false;
        c.detail = "equivariance fails for generator " + std::to_string(k);
      }
  return c;
}

// does map have a fixed point in [a, b] (exact, via breakpoints)
inline bool has_fixed_point(const PLHomeo& f, const Q& a, const Q& b) {
  std::vector<Q> xs{a, b};
  for (auto& p : f.points())
    if (p.x > a && p.x < b) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  int prev = 2;
  for (auto& x : xs) {
    int s = lorder::sgn(Q(f(x) - x));
    if (s == 0) return true;
    if (prev != 2 && s != prev) return true;
    prev = s;
  }
  return false;
}

// ---------- crossings

struct Crossing {
  Word f, g, u, v, w;
  int M = 0, N = 0;
};

struct CrossingCheck {
  bool u_lt_w = false, w_lt_v = false;
  bool g_pow_below_v = false;  // g^n u < v for n <= bound
  bool f_pow_above_u = false;  // f^n v > u for n <= bound
  bool fN_v_lt_w = false, w_lt_gM_u = false;
  int first_bad_g = 0, first_bad_f = 0;
  bool all() const { return u_lt_w && w_lt_v && g_pow_below_v && f_pow_above_u && fN_v_lt_w && w_lt_gM_u; }
};

inline CrossingCheck check_crossing(const Oracle& o, const Elem& f, const Elem& g, const Elem& u, const Elem& v,
                                    const Elem& w, int M, int N, int bound) {
  const Group& G = o.group();
  CrossingCheck c;
  c.u_lt_w = o.less(u, w);
  c.w_lt_v = o.less(w, v);
  c.g_pow_below_v = true;
  c.f_pow_above_u = true;
  Elem gu = u, fv = v;
  for (int n = 1; n <= bound; ++n) {
    gu = G.mul(g, gu);
    fv = G.mul(f, fv);
    if (c.g_pow_below_v && !o.less(gu, v)) {
      c.g_pow_below_v = false;
      c.first_bad_g = n;
    }
    if (c.f_pow_above_u && !o.less(u, fv)) {
      c.f_pow_above_u = false;
      c.first_bad_f = n;
    }
  }
  c.fN_v_lt_w = o.less(G.mul(G.pow(f, N), v), w);
  c.w_lt_gM_u = o.less(w, G.mul(G.pow(g, M), u));
  return c;
}

class CrossingSearch {
 public:
  // powers n <= 2*bound enter the order inequalities; M, N <= bound
  CrossingSearch(const Oracle& o, int radius, int bound) : o_(o), B_(o.group(), radius), bound_(bound) {
    const Group& G = o.group();
    int n = static_cast<int>(B_.size());
    order_.resize(n);
    for (int i = 0; i < n; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return o.less(B_[a].elem, B_[b].elem); });
    pos_.resize(n);
    for (int r = 0; r < n; ++r) pos_[order_[r]] = r;
    auto grid = [n] { return std::vector<std::vector<int>>(n, std::vector<int>(n)); };
    gl_ = grid();
    gle2_ = grid();
    fl2_ = grid();
    fle_ = grid();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Elem cur = G.mul(B_[a].elem, B_[b].elem);
        Elem hi = cur, lo = cur, hiB = cur, loB = cur;
        for (int k = 2; k <= 2 * bound; ++k) {
          cur = G.mul(B_[a].elem, cur);
          if (o.less(hi, cur)) hi = cur;
          if (o.less(cur, lo)) lo = cur;
          if (k <= bound) {
            hiB = hi;
            loB = lo;
          }
        }
        // as g = a, u = b: max over n <= bound (strict rank), max over n <= 2 bound (weak rank)
        gl_[a][b] = rank(hiB).first;
        gle2_[a][b] = rank(hi).second;
        // as f = a, v = b: min over n <= 2 bound (strict rank), min over n <= bound (weak rank)
        fl2_[a][b] = rank(lo).first;
        fle_[a][b] = rank(loB).second;
      }
  }

  const BallIndex& ball() const { return B_; }
  const std::vector<int>& sorted() const { return order_; }
  int pos(int i) const { return pos_[i]; }

  // first crossing in canonical order of (f, g, u, v)
  std::optional<Crossing> first() const {
    int n = static_cast<int>(B_.size());
    std::vector<std::vector<int>> suf(n);
    for (int f = 1; f < n; ++f) {
      for (int u = 0; u < n; ++u) suffix_min(f, u, suf[u]);
      for (int g = 1; g < n; ++g)
        for (int u = 0; u < n; ++u) {
          if (suf[u][gle2_[g][u]] >= gl_[g][u]) continue;
          for (int v = 0; v < n; ++v)
            if (valid(f, g, u, v)) return build(f, g, u, v);
        }
    }
    return std::nullopt;
  }

  // per u: least sorted position of an admissible w over all crossings at u (n if none)
  std::vector<int> lowest_middles() const {
    int n = static_cast<int>(B_.size());
    std::vector<int> best(n, n), suf;
    for (int f = 1; f < n; ++f)
      for (int u = 0; u < n; ++u) {
        suffix_min(f, u, suf);
        for (int g = 1; g < n; ++g) {
          int m = suf[gle2_[g][u]];
          if (m < gl_[g][u]) best[u] = std::min(best[u], m);
        }
      }
    return best;
  }

  // per v: greatest sorted position of an admissible w over all crossings at v (-1 if none)
  std::vector<int> highest_middles() const {
    int n = static_cast<int>(B_.size());
    std::vector<int> best(n, -1), pre(n + 1);
    for (int g = 1; g < n; ++g)
      for (int v = 0; v < n; ++v) {
        // pre[r]: max gl over u with pos < r and g^n u <= v for n <= 2 bound
        pre[0] = -1;
        for (int r = 0; r < n; ++r) {
          int u = order_[r];
          pre[r + 1] = std::max(pre[r], gle2_[g][u] <= pos_[v] ? gl_[g][u] : -1);
        }
        for (int f = 1; f < n; ++f) {
          int m = pre[fl2_[f][v]];
          if (m > fle_[f][v]) best[v] = std::max(best[v], m - 1);
        }
      }
    return best;
  }

  Crossing build(int f, int g, int u, int v) const {
    const Group& G = o_.group();
    // canonical-first w among sorted positions [fle, gl)
    int w = -1;
    for (int r = fle_[f][v]; r < gl_[g][u]; ++r)
      if (w < 0 || order_[r] < w) w = order_[r];
    Crossing c{B_[f].word, B_[g].word, B_[u].word, B_[v].word, B_[w].word, 0, 0};
    Elem cur = B_[u].elem;
    for (int m = 1; m <= bound_; ++m) {
      cur = G.mul(B_[g].elem, cur);
      if (o_.less(B_[w].elem, cur)) {
        c.M = m;
        break;
      }
    }
    cur = B_[v].elem;
    for (int m = 1; m <= bound_; ++m) {
      cur = G.mul(B_[f].elem, cur);
      if (o_.less(cur, B_[w].elem)) {
        c.N = m;
        break;
      }
    }
    return c;
  }

 private:
  // out[r]: least fle over v with pos >= r and min f^n v above u
  void suffix_min(int f, int u, std::vector<int>& out) const {
    int n = static_cast<int>(B_.size());
    out.assign(n + 1, n);
    for (int r = n - 1; r >= 0; --r) {
      int v = order_[r];
      out[r] = std::min(out[r + 1], fl2_[f][v] > pos_[u] ? fle_[f][v] : n);
    }
  }

  // u < Fmin(f,v) < w < Gmax(g,u) < v for some ball element w
  bool valid(int f, int g, int u, int v) const {
    return pos_[u] < fl2_[f][v] && gle2_[g][u] <= pos_[v] && fle_[f][v] < gl_[g][u];
  }

  // (# ball elements < x, # ball elements <= x)
  std::pair<int, int> rank(const Elem& x) const {
    int n = static_cast<int>(order_.size());
    int lo = 0, hi = n;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (o_.less(B_[order_[mid]].elem, x))
        lo = mid + 1;
      else
        hi = mid;
    }
    int less = lo;
    int le = less;
    if (le < n && o_.group().equal(B_[order_[le]].elem, x)) ++le;
    return {less, le};
  }

  const Oracle& o_;
  BallIndex B_;
  int bound_;
  std::vector<int> order_, pos_;
  std::vector<std::vector<int>> gl_, gle2_, fl2_, fle_;
};

inline std::optional<Crossing> find_crossing(const Oracle& o, int radius, int bound) {
  CrossingSearch S(o, radius, bound);
  return S.first();
}

// ---------- Conrad property at ball scale

struct ConradWitness {
  Word f, g;  // positive, with f g^2 < g
};

inline std::optional<ConradWitness> conradian_violation(const Oracle& o, int radius) {
  const Group& G = o.group();
  auto B = element_ball(G, radius);
  std::vector<const BallElem*> pos;
  for (auto& b : B)
    if (o.sign(b.elem) > 0) pos.push_back(&b);
  for (auto* f : pos)
    for (auto* g : pos) {
      Elem x = G.mul(G.inv(g->elem), G.mul(f->elem, G.mul(g->elem, g->elem)));
      if (o.sign(x) <= 0) return ConradWitness{f->word, g->word};
    }
  return std::nullopt;
}

inline bool is_conradian_ball(const Oracle& o, int radius) { return !conradian_violation(o, radius); }

// witness of the converse direction: h = g^M f^N and hbar = g^M conjugated by w
inline std::pair<Elem, Elem> conrad_pair_from_crossing(const Oracle& o, const Crossing& c) {
  const Group& G = o.group();
  Elem f = G.eval(c.f), g = G.eval(c.g), w = G.eval(c.w);
  Elem h = G.mul(G.pow(g, c.M), G.pow(f, c.N));
  Elem hb = G.pow(g, c.M);
  return {G.conj(h, w), G.conj(hb, w)};
}

// ---------- Conradian soul at ball scale

struct Soul {
  std::vector<Word> members;  // canonical ball order
  bool any_crossing = false;
  std::optional<Word> upper, lower;  // extreme admissible w on each side
};

// Crossings are closed under conjugation, so (f,g;u,v,w) gives one with u = id and middle u^-1 w,
// and one with v = id and middle v^-1 w. The bounds use these normalized middles.
inline Soul conradian_soul_ball(const Oracle& o, int radius, int bound) {
  const Group& G = o.group();
  CrossingSearch S(o, radius, bound);
  const BallIndex& B = S.ball();
  int n = static_cast<int>(B.size());
  std::vector<int> lo_at = S.lowest_middles(), hi_at = S.highest_middles();
  bool any = std::any_of(lo_at.begin(), lo_at.end(), [n](int x) { return x < n; });
  Soul s;
  s.any_crossing = any;
  std::optional<Elem> up, down;
  for (int u = 0; u < n; ++u) {
    if (lo_at[u] >= n) continue;
    Word w = B[u].word.inverse() * B[S.sorted()[lo_at[u]]].word;
    Elem e = G.eval(w);
    if (!up || o.less(e, *up)) {
      up = e;
      s.upper = w;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (hi_at[v] < 0) continue;
    Word w = B[v].word.inverse() * B[S.sorted()[hi_at[v]]].word;
    Elem e = G.eval(w);
    if (!down || o.less(*down, e)) {
      down = e;
      s.lower = w;
    }
  }
  for (int i = 0; i < n; ++i) {
    int sg = o.sign(B[i].elem);
    bool in = sg == 0 || (sg > 0 && (!up || !o.less(*up, B[i].elem))) || (sg < 0 && (!down || !o.less(B[i].elem, *down)));
    if (in) s.members.push_back(B[i].word);
  }
  return s;
}

// ---------- Hoelder estimate: f^q <= g^p < f^{q+1}

inline long long holder_q(const Oracle& o, const Elem& f, const Elem& g, long long p, long long budget = 1LL << 40) {
  const Group& G = o.group();
  if (o.sign(f) <= 0) throw ComputeError("holder needs f positive");
  Elem gp = G.pow(g, p);
  auto le = [&](long long q) { return o.cmp(G.pow(f, q), gp) <= 0; };  // f^q <= g^p
  long long lo, hi;  // le(lo) true, le(hi) false
  if (le(0)) {
    lo = 0;
    hi = 1;
    while (le(hi)) {
      lo = hi;
      hi *= 2;
      if (hi > budget) throw ComputeError("Archimedean search budget exceeded");
    }
  } else {
    hi = 0;
    lo = -1;
    while (!le(lo)) {
      hi = lo;
      lo *= 2;
      if (-lo > budget) throw ComputeError("Archimedean search budget exceeded");
    }
  }
  while (hi - lo > 1) {
    long long mid = lo + (hi - lo) / 2;
    if (le(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

inline Q holder_estimate(const Oracle& o, const Elem& f, const Elem& g, long long p) {
  if (p <= 0) throw ComputeError("holder needs p >= 1");
  return qnorm(Q(qll(holder_q(o, f, g, p)) / qll(p)));
}

// ---------- verbal counterexamples: W(f,g)(0) < 0 with f(0), g(0) > 0

struct VerbalCertificate {
  PLHomeo f, g;
  Q f0, g0, w0;
  std::vector<Q> orbit;  // points visited while evaluating W at 0, right to left
};

inline bool mixed_sign(const Word& W) {
  bool pos = false, neg = false;
  for (auto& l : W) (l.sign > 0 ? pos : neg) = true;
  return pos && neg;
}

class VerbalBuilder {
 public:
  explicit VerbalBuilder(Word W) : W_(std::move(W)) {}

  std::optional<VerbalCertificate> run() {
    maps_[0].clear();
    maps_[1].clear();
    points_ = {Q(0)};
    // f(0) and g(0) first, both positive
    for (const Q& y0 : candidates_fwd(0, Q(0), true)) {
      auto s0 = snapshot();
      if (!set_pair(0, Q(0), y0)) { restore(s0); continue; }
      for (const Q& y1 : candidates_fwd(1, Q(0), true)) {
        auto s1 = snapshot();
        if (set_pair(1, Q(0), y1) && dfs(static_cast<int>(W_.size()) - 1, Q(0))) return finish();
        restore(s1);
      }
      restore(s0);
    }
    return std::nullopt;
  }

 private:
  using PMap = std::vector<std::pair<Q, Q>>;  // sorted by x, increasing y
  struct Snap {
    PMap m0, m1;
    std::vector<Q> pts;
  };
  Snap snapshot() const { return {maps_[0], maps_[1], points_}; }
  void restore(const Snap& s) {
    maps_[0] = s.m0;
    maps_[1] = s.m1;
    points_ = s.pts;
  }

  void add_point(const Q& p) {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) points_.insert(it, p);
  }

  bool set_pair(int k, const Q& x, const Q& y) {
    auto& m = maps_[k];
    auto it = std::lower_bound(m.begin(), m.end(), x, [](const std::pair<Q, Q>& a, const Q& v) { return a.first < v; });
    if (it != m.end() && it->first == x) return it->second == y;
    if (it != m.begin() && !((it - 1)->second < y)) return false;
    if (it != m.end() && !(y < it->second)) return false;
    m.insert(it, {x, y});
    add_point(x);
    add_point(y);
    return true;
  }

  // choices for an image of x under map k: existing points in the allowed window, then fresh points in gaps
  std::vector<Q> window_choices(const std::optional<Q>& lo, const std::optional<Q>& hi) const {
    std::vector<Q> inner;
    for (auto& p : points_)
      if ((!lo || p > *lo) && (!hi || p < *hi)) inner.push_back(p);
    std::vector<Q> out;
    // gaps first, leftmost first
    std::vector<Q> edges;
    if (inner.empty()) {
      if (lo && hi) out.push_back(qnorm((*lo + *hi) / 2));
      else if (lo) out.push_back(*lo + 1);
      else if (hi) out.push_back(*hi - 1);
      else out.push_back(Q(0));
    } else {
      out.push_back(lo ? qnorm((*lo + inner.front()) / 2) : inner.front() - 1);
      for (std::size_t i = 0; i + 1 < inner.size(); ++i) out.push_back(qnorm((inner[i] + inner[i + 1]) / 2));
      out.push_back(hi ? qnorm((inner.back() + *hi) / 2) : inner.back() + 1);
      for (auto& p : inner) out.push_back(p);
    }
    return out;
  }

  std::vector<Q> candidates_fwd(int k, const Q& x, bool must_exceed_x) const {
    auto& m = maps_[k];
    std::optional<Q> lo, hi;
    for (auto& [a, b] : m) {
      if (a < x) lo = b;
      if (a > x && !hi) hi = b;
    }
    if (must_exceed_x && (!lo || *lo < x)) lo = x;
    return window_choices(lo, hi);
  }
  std::vector<Q> candidates_bwd(int k, const Q& y) const {
    auto& m = maps_[k];
    std::optional<Q> lo, hi;
    for (auto& [a, b] : m) {
      if (b < y) lo = a;
      if (b > y && !hi) hi = a;
    }
    return window_choices(lo, hi);
  }

  std::optional<Q> image(int k, const Q& x) const {
    for (auto& [a, b] : maps_[k])
      if (a == x) return b;
    return std::nullopt;
  }
  std::optional<Q> preimage(int k, const Q& y) const {
    for (auto& [a, b] : maps_[k])
      if (b == y) return a;
    return std::nullopt;
  }

  // process letters W_[i], W_[i-1], ..., W_[0] starting at x
  bool dfs(int i, const Q& x) {
    if (++nodes_ > 2'000'000) return false;
    if (i < 0) {
      if (x < 0) {
        final_ = x;
        return true;
      }
      return false;
    }
    const Letter& l = W_[i];
    int k = l.gen;
    if (l.sign > 0) {
      if (auto y = image(k, x)) return dfs(i - 1, *y);
      for (const Q& y : candidates_fwd(k, x, false)) {
        auto s = snapshot();
        if (set_pair(k, x, y) && dfs(i - 1, y)) return true;
        restore(s);
      }
    } else {
      if (auto y = preimage(k, x)) return dfs(i - 1, *y);
      for (const Q& y : candidates_bwd(k, x)) {
        auto s = snapshot();
        if (set_pair(k, y, x) && dfs(i - 1, y)) return true;
        restore(s);
      }
    }
    return false;
  }

  std::optional<VerbalCertificate> finish() const {
    std::vector<PLHomeo> mp;
    for (int k = 0; k < 2; ++k) {
      std::vector<PLHomeo::Pt> pts;
      for (auto& [a, b] : maps_[k]) pts.push_back({a, b});
      mp.push_back(pl_through(pts));
    }
    VerbalCertificate c{mp[0], mp[1], mp[0](Q(0)), mp[1](Q(0)), Q(0), {}};
    Q x = 0;
    c.orbit.push_back(x);
    for (int i = static_cast<int>(W_.size()) - 1; i >= 0; --i) {
      const PLHomeo& h = mp[W_[i].gen];
      x = W_[i].sign > 0 ? h(x) : h.inv(x);
      c.orbit.push_back(x);
    }
    c.w0 = x;
    return c;
  }

  Word W_;
  PMap maps_[2];
  std::vector<Q> points_;
  Q final_;
  long nodes_ = 0;
};

// W over the alphabet {a, b} (a -> f, b -> g)
inline VerbalCertificate build_verbal_counterexample(const Word& W) {
  for (auto& l : W)
    if (l.gen > 1) throw ComputeError("verbal word must use two letters");
  if (!mixed_sign(W)) throw ComputeError("verbal word must contain both positive and negative letters");
  VerbalBuilder b(W);
  auto c = b.run();
  if (!c) throw ComputeError("no placement found within the search budget");
  if (!(c->f0 > 0 && c->g0 > 0 && c->w0 < 0)) throw ComputeError("internal: certificate failed verification");
  return *c;
}

// ---------- cofinality

inline std::optional<Word> cofinal_violation(const Oracle& o, const Elem& g, int radius, int budget) {
  const Group& G = o.group();
  int s = o.sign(g);
  if (s == 0) throw ComputeError("cofinality needs g != id");
  Elem gp = s > 0 ? g : G.inv(g);
  Elem hi = G.pow(gp, budget), lo = G.inv(hi);
  for (auto& b : element_ball(G, radius))
    if (!(o.less(lo, b.elem) && o.less(b.elem, hi))) return b.word;
  return std::nullopt;
}

inline bool cofinal_ball(const Oracle& o, const Elem& g, int radius, int budget = 64) {
  return !cofinal_violation(o, g, radius, budget);
}

// ---------- Plante's action of Z wr Z: f = 2x, g_i = f^i g f^-i, extended to commute

class PlanteAction {
 public:
  PlanteAction() {
    using P = PLHomeo::Pt;
    base_ = PLHomeo({P{Q(-1), Q(-1)}, P{Q(-1, 2), Q(1, 2)}, P{Q(1), Q(1)}});
  }

  // g_j(x), or its inverse when inv is set
  Q g(int j, const Q& x, bool inv = false) const { return at(j, x, std::max(level(x), j), inv); }
  static Q f(const Q& x) { return x * 2; }
  static Q finv(const Q& x) { return x / 2; }

 private:
  // smallest K with |x| <= 2^K
  static int level(const Q& x) {
    Q a = abs(x);
    int K = -64;
    while (a > qpow(Q(2), K)) ++K;
    return K;
  }
  // x in I_K, K >= j. g_j fixes the endpoints of I_K for K > j (limit of the shrinking translates)
  Q at(int j, const Q& x, int K, bool inv) const {
    if (K == j) return local(j, x, inv);
    Q top = qpow(Q(2), K);
    if (x == top || x == -top) return x;
    // x = g_K^m(z), z in [-2^{K-1}, 2^{K-1})
    Q half = top / 2;
    Q z = x;
    long m = 0;
    while (z >= half) {
      z = local(K, z, true);
      ++m;
    }
    while (z < -half) {
      z = local(K, z, false);
      --m;
    }
    Q y = at(j, z, K - 1, inv);
    for (long k = 0; k < m; ++k) y = local(K, y, false);
    for (long k = 0; k < -m; ++k) y = local(K, y, true);
    return y;
  }
  // g_j on I_j = [-2^j, 2^j]
  Q local(int j, const Q& x, bool inv) const {
    Q s = qpow(Q(2), j);
    Q y = inv ? base_.inv(x / s) : base_(x / s);
    return qnorm(y * s);
  }
  PLHomeo base_;
};

// ---------- the almost-periodic map t + (sin t + sin(sqrt2 t))/3 with outward rounding

struct Interval {
  double lo, hi;
};

inline Interval widen(double x, int ulps) {
  double lo = x, hi = x;
  for (int k = 0; k < ulps; ++k) {
    lo = std::nextafter(lo, -INFINITY);
    hi = std::nextafter(hi, INFINITY);
  }
  return {lo, hi};
}

inline Interval almost_periodic(double t) {
  Interval s2 = widen(std::sqrt(2.0), 1);
  // argument interval for sqrt2 * t
  double a1 = s2.lo * t, a2 = s2.hi * t;
  Interval arg{std::min(a1, a2), std::max(a1, a2)};
  arg.lo = widen(arg.lo, 2).lo;
  arg.hi = widen(arg.hi, 2).hi;
  double mid = 0.5 * (arg.lo + arg.hi), rad = 0.5 * (arg.hi - arg.lo);
  // sin is 1-Lipschitz; libm error under 2 ulp
  Interval sb = widen(std::sin(mid), 4);
  sb.lo -= rad;
  sb.hi += rad;
  Interval sa = widen(std::sin(t), 4);
  double slo = widen((sa.lo + sb.lo) / 3.0, 4).lo, shi = widen((sa.hi + sb.hi) / 3.0, 4).hi;
  return {widen(t + slo, 2).lo, widen(t + shi, 2).hi};
}

struct MonotoneCheck {
  bool increasing = true;
  double min_gap = INFINITY;  // smallest certified increment
  double derivative_bound = 1.0 - (1.0 + std::sqrt(2.0)) / 3.0;
};

inline MonotoneCheck check_almost_periodic(double a, double b, long samples) {
  MonotoneCheck r;
  double h = (b - a) / static_cast<double>(samples);
  Interval prev = almost_periodic(a);
  for (long i = 1; i <= samples; ++i) {
    Interval cur = almost_periodic(a + h * static_cast<double>(i));
    if (!(cur.lo > prev.hi)) r.increasing = false;
    r.min_gap = std::min(r.min_gap, cur.lo - prev.hi);
    prev = cur;
  }
  return r;
}

}  // namespace lorder
