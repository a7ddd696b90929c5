#pragma once

#include "groups.hpp"
#include "orders.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace lorder {

// element ball with inverse and product lookup
class BallIndex {
 public:
  BallIndex(const Group& G, int radius) : G_(&G), radius_(radius), elems_(element_ball(G, radius)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) pos_[elems_[i].key] = static_cast<int>(i);
    inv_.resize(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) inv_[i] = find(G.inv(elems_[i].elem));
  }
  const Group& group() const { return *G_; }
  int radius() const { return radius_; }
  std::size_t size() const { return elems_.size(); }
  const BallElem& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<BallElem>& elems() const { return elems_; }
  int find(const Elem& e) const {
    auto it = pos_.find(G_->key(e));
    return it == pos_.end() ? -1 : it->second;
  }
  int inv(int i) const { return inv_[i]; }
  int identity() const { return 0; }

  // (a, b, ab) with a, b, ab all nontrivial and in the ball
  const std::vector<std::array<int, 3>>& triples() const {
    if (!triples_built_) {
      for (std::size_t a = 1; a < elems_.size(); ++a)
        for (std::size_t b = 1; b < elems_.size(); ++b) {
          if (static_cast<int>(b) == inv_[a]) continue;
          int c = find(G_->mul(elems_[a].elem, elems_[b].elem));
          if (c > 0) triples_.push_back({static_cast<int>(a), static_cast<int>(b), c});
        }
      triples_built_ = true;
    }
    return triples_;
  }

 private:
  const Group* G_;
  int radius_;
  std::vector<BallElem> elems_;
  std::unordered_map<std::string, int> pos_;
  std::vector<int> inv_;
  mutable bool triples_built_ = false;
  mutable std::vector<std::array<int, 3>> triples_;
};

struct BallCone {
  std::string group;
  int radius = 0;
  std::vector<Word> words;  // canonical ball order, identity first
  std::vector<int> signs;   // aligned with words; 0 only at identity
  const Alphabet* alpha = nullptr;

  friend bool operator==(const BallCone& a, const BallCone& b) {
    return a.group == b.group && a.radius == b.radius && a.signs == b.signs;
  }
};

inline BallCone cone_from_signs(const BallIndex& B, std::vector<int> signs) {
  BallCone c;
  c.group = B.group().spec();
  c.radius = B.radius();
  for (auto& e : B.elems()) c.words.push_back(e.word);
  c.signs = std::move(signs);
  c.alpha = &B.group().alphabet();
  return c;
}

struct ConeViolation {
  std::string what;
  std::vector<Word> witness;
};

inline std::optional<ConeViolation> check_cone(const BallIndex& B, const std::vector<int>& s) {
  if (s[0] != 0) return ConeViolation{"identity has nonzero sign", {Word()}};
  for (std::size_t i = 1; i < B.size(); ++i) {
    if (s[i] == 0) return ConeViolation{"nontrivial element with sign 0", {B[i].word}};
    int j = B.inv(i);
    if (j >= 0 && s[j] != -s[i]) return ConeViolation{"antisymmetry", {B[i].word, B[j].word}};
  }
  for (auto& t : B.triples())
    if (s[t[0]] > 0 && s[t[1]] > 0 && s[t[2]] < 0)
      return ConeViolation{"closure", {B[t[0]].word, B[t[1]].word, B[t[2]].word}};
  return std::nullopt;
}

inline BallCone ball_cone(const Oracle& o, const BallIndex& B, bool validate = true) {
  std::vector<int> s(B.size());
  for (std::size_t i = 0; i < B.size(); ++i) s[i] = o.sign(B[i].elem);
  if (validate) {
    auto v = check_cone(B, s);
    if (v) {
      std::string w;
      for (auto& x : v->witness) w += " [" + B.group().alphabet().format(x) + "]";
      throw ComputeError("oracle " + o.name() + " violates " + v->what + ":" + w);
    }
  }
  return cone_from_signs(B, std::move(s));
}

inline BallCone ball_cone(const Oracle& o, int radius, bool validate = true) {
  BallIndex B(o.group(), radius);
  return ball_cone(o, B, validate);
}

inline BallCone negate(const BallCone& c) {
  BallCone r = c;
  for (auto& s : r.signs) s = -s;
  return r;
}

struct Distance {
  int agree_radius = 0;  // largest n with agreement on the n-ball
  bool exact = false;    // agreement on the whole table; value is then an upper bound
  Q value = 1;           // 2^-n
};

inline Distance distance(const BallCone& a, const BallCone& b) {
  if (a.group != b.group) throw ComputeError("cones on different groups");
  int R = std::min(a.radius, b.radius);
  std::size_t n = std::min(a.words.size(), b.words.size());
  int first_bad = R + 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<int>(a.words[i].size()) > R) break;
    if (a.words[i] != b.words[i]) throw ComputeError("cones use different ball orders");
    if (a.signs[i] != b.signs[i]) {
      first_bad = static_cast<int>(a.words[i].size());
      break;
    }
  }
  Distance d;
  d.agree_radius = first_bad - 1;
  d.exact = first_bad > R;
  d.value = qpow(Q(2), -d.agree_radius);
  return d;
}

// ---------- enumeration of ball-consistent cones

struct EnumResult {
  std::vector<std::vector<int>> tables;  // aligned with the ball
  bool capped = false;
  long long nodes = 0;
};

class ConeSearch {
 public:
  explicit ConeSearch(const BallIndex& B) : B_(B) {
    int n = static_cast<int>(B.size());
    var_.assign(n, -1);
    pol_.assign(n, 0);
    for (int i = 1; i < n; ++i) {
      if (var_[i] >= 0) continue;
      int j = B.inv(i);
      int v = static_cast<int>(rep_.size());
      rep_.push_back(i);
      var_[i] = v;
      pol_[i] = 1;
      if (j > 0) {
        var_[j] = v;
        pol_[j] = -1;
      }
    }
    occ_.assign(rep_.size(), {});
    auto& T = B.triples();
    for (std::size_t t = 0; t < T.size(); ++t)
      for (int k = 0; k < 3; ++k) {
        auto& o = occ_[var_[T[t][k]]];
        if (o.empty() || o.back() != static_cast<int>(t)) o.push_back(static_cast<int>(t));
      }
    val_.assign(rep_.size(), 0);
  }

  // seeds: (ball index, sign) forced before search
  EnumResult run(const std::vector<std::pair<int, int>>& seeds, long long max_results, long long max_nodes) {
    EnumResult res;
    std::fill(val_.begin(), val_.end(), 0);
    trail_.clear();
    for (auto [i, s] : seeds) {
      if (i <= 0) continue;
      if (!assign(var_[i], s * pol_[i]) || !propagate()) return res;
    }
    max_results_ = max_results;
    max_nodes_ = max_nodes;
    dfs(0, res);
    return res;
  }

  int sign_of(int i) const { return i == 0 ? 0 : pol_[i] * val_[var_[i]]; }

 private:
  bool assign(int v, int s) {
    if (val_[v] == s) return true;
    if (val_[v] == -s) return false;
    val_[v] = s;
    trail_.push_back(v);
    queue_.push_back(v);
    return true;
  }

  bool propagate() {
    auto& T = B_.triples();
    while (!queue_.empty()) {
      int v = queue_.back();
      queue_.pop_back();
      for (int t : occ_[v]) {
        int a = T[t][0], b = T[t][1], c = T[t][2];
        int sa = sign_of(a), sb = sign_of(b), sc = sign_of(c);
        if (sa > 0 && sb > 0) {
          if (sc < 0) return fail();
          if (sc == 0 && !assign(var_[c], pol_[c])) return fail();
        } else if (sa > 0 && sc < 0) {
          if (sb == 0 && !assign(var_[b], -pol_[b])) return fail();
        } else if (sb > 0 && sc < 0) {
          if (sa == 0 && !assign(var_[a], -pol_[a])) return fail();
        }
      }
    }
    return true;
  }
  bool fail() {
    queue_.clear();
    return false;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      val_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  void dfs(std::size_t v, EnumResult& res) {
    if (res.capped) return;
    if (++res.nodes > max_nodes_) {
      res.capped = true;
      return;
    }
    while (v < rep_.size() && val_[v] != 0) ++v;
    if (v == rep_.size()) {
      std::vector<int> s(B_.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = sign_of(static_cast<int>(i));
      res.tables.push_back(std::move(s));
      if (static_cast<long long>(res.tables.size()) >= max_results_) res.capped = true;
      return;
    }
    for (int s : {1, -1}) {
      std::size_t mark = trail_.size();
      if (assign(static_cast<int>(v), s) && propagate()) dfs(v + 1, res);
      undo(mark);
      if (res.capped) return;
    }
  }

  const BallIndex& B_;
  std::vector<int> var_, pol_, rep_;
  std::vector<std::vector<int>> occ_;
  std::vector<int> val_;
  std::vector<int> trail_, queue_;
  long long max_results_ = 0, max_nodes_ = 0;
};

struct ConeEnumeration {
  std::vector<BallCone> cones;
  bool capped = false;
  long long nodes = 0;
};

inline ConeEnumeration enumerate_ball_cones(const BallIndex& B, long long max_results = 100000,
                                            long long max_nodes = 50'000'000) {
  ConeSearch S(B);
  auto r = S.run({}, max_results, max_nodes);
  ConeEnumeration out;
  out.capped = r.capped;
  out.nodes = r.nodes;
  for (auto& t : r.tables) out.cones.push_back(cone_from_signs(B, std::move(t)));
  return out;
}

inline ConeEnumeration enumerate_ball_cones(const Group& G, int radius, long long max_results = 100000,
                                            long long max_nodes = 50'000'000) {
  BallIndex B(G, radius);
  return enumerate_ball_cones(B, max_results, max_nodes);
}

struct ExtensionCount {
  long long count = 0;
  bool capped = false;
};

// number of ball-consistent cones on B containing the given signs (stops at `stop`)
inline ExtensionCount count_extensions(const BallIndex& B, const std::vector<std::pair<Word, int>>& seeds,
                                       long long stop = 2, long long max_nodes = 50'000'000) {
  std::vector<std::pair<int, int>> s;
  for (auto& [w, sg] : seeds) {
    int i = B.find(B.group().eval(w));
    if (i < 0) throw ComputeError("seed outside the probe ball");
    s.push_back({i, sg});
  }
  ConeSearch S(B);
  auto r = S.run(s, stop, max_nodes);
  return {static_cast<long long>(r.tables.size()), r.capped && r.nodes > max_nodes};
}

struct Isolation {
  bool isolated = false;
  long long extensions = 0;
  bool capped = false;
};

inline Isolation is_isolated_at_radius(const BallCone& c, const Group& G, int probe_radius,
                                       long long max_nodes = 50'000'000) {
  if (probe_radius < c.radius) throw ComputeError("probe radius below cone radius");
  BallIndex B(G, probe_radius);
  std::vector<std::pair<Word, int>> seeds;
  for (std::size_t i = 1; i < c.words.size(); ++i) seeds.push_back({c.words[i], c.signs[i]});
  auto e = count_extensions(B, seeds, 2, max_nodes);
  return {e.count == 1 && !e.capped, e.count, e.capped};
}

// cone given by sign seeds on a few words (e.g. generators) rather than a full ball
inline Isolation is_isolated_from_seeds(const std::vector<std::pair<Word, int>>& seeds, const Group& G,
                                        int probe_radius, long long max_nodes = 50'000'000) {
  BallIndex B(G, probe_radius);
  auto e = count_extensions(B, seeds, 2, max_nodes);
  return {e.count == 1 && !e.capped, e.count, e.capped};
}

// ---------- semigroup closure inside a ball

// smallest subset of the ball containing seeds and closed under in-ball products
inline std::vector<char> ball_closure(const BallIndex& B, const std::vector<int>& seeds) {
  std::vector<char> in(B.size(), 0);
  std::vector<int> members;
  for (int s : seeds)
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur = members;
    for (int a : cur)
      for (int b : cur) {
        int c = B.find(B.group().mul(B[a].elem, B[b].elem));
        if (c >= 0 && !in[c]) {
          in[c] = 1;
          members.push_back(c);
          grew = true;
        }
      }
  }
  return in;
}

// ---------- compatible exponents

struct SignWitness {
  std::vector<int> eta;
  std::vector<int> factors;  // indices into G; product of g^{eta(g)} in this order is id
};

struct CompatibleSigns {
  std::optional<std::vector<int>> eta;
  std::vector<SignWitness> witnesses;  // filled when no eta exists
};

inline CompatibleSigns compatible_signs(const Group& G, const std::vector<Elem>& S, int length_bound) {
  int n = static_cast<int>(S.size());
  if (n > 20) throw ComputeError("too many elements for sign search");
  for (auto& s : S)
    if (G.is_id(s)) throw ComputeError("compatible_signs needs nontrivial elements");
  CompatibleSigns out;
  for (long mask = 0; mask < (1L << n); ++mask) {
    std::vector<int> eta(n);
    std::vector<Elem> gens;
    for (int i = 0; i < n; ++i) {
      eta[i] = (mask >> i) & 1 ? -1 : 1;
      gens.push_back(eta[i] > 0 ? S[i] : G.inv(S[i]));
    }
    // BFS over products; parent links rebuild the witness
    struct Node {
      Elem e;
      int parent;
      int fac;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::string, int> seen;
    std::vector<int> layer;
    int hit = -1;
    for (int i = 0; i < n && hit < 0; ++i) {
      auto k = G.key(gens[i]);
      if (seen.count(k)) continue;
      seen[k] = static_cast<int>(nodes.size());
      nodes.push_back({gens[i], -1, i});
      layer.push_back(static_cast<int>(nodes.size()) - 1);
    }
    for (int len = 2; len <= length_bound && hit < 0 && !layer.empty(); ++len) {
      std::vector<int> next;
      for (int p : layer) {
        for (int i = 0; i < n; ++i) {
          Elem e = G.mul(nodes[p].e, gens[i]);
          if (G.is_id(e)) {
            nodes.push_back({e, p, i});
            hit = static_cast<int>(nodes.size()) - 1;
            break;
          }
          auto k = G.key(e);
          if (seen.count(k)) continue;
          seen[k] = static_cast<int>(nodes.size());
          nodes.push_back({std::move(e), p, i});
          next.push_back(static_cast<int>(nodes.size()) - 1);
        }
        if (hit >= 0) break;
      }
      layer = std::move(next);
    }
    if (hit < 0) {
      out.eta = eta;
      out.witnesses.clear();
      return out;
    }
    SignWitness w;
    w.eta = eta;
    for (int p = hit; p >= 0; p = nodes[p].parent) w.factors.push_back(nodes[p].fac);
    std::reverse(w.factors.begin(), w.factors.end());
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

}  // namespace lorder
