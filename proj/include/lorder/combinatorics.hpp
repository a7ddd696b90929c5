#pragma once

#include "groups.hpp"
#include "order_space.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace lorder {

struct FiniteSubset {
  std::vector<Elem> elems;
  std::vector<std::string> keys;

  FiniteSubset() = default;
  FiniteSubset(const Group& G, const std::vector<Elem>& xs) {
    for (auto& x : xs) add(G, x);
  }
  bool add(const Group& G, const Elem& x) {
    std::string k = G.key(x);
    if (index_.count(k)) return false;
    index_[k] = static_cast<int>(elems.size());
    elems.push_back(x);
    keys.push_back(std::move(k));
    return true;
  }
  bool contains(const Group& G, const Elem& x) const { return index_.count(G.key(x)) > 0; }
  std::size_t size() const { return elems.size(); }

 private:
  std::unordered_map<std::string, int> index_;
};

inline FiniteSubset subset_of_words(const Group& G, const std::vector<std::string>& words) {
  FiniteSubset s;
  for (auto& w : words) s.add(G, G.parse(w));
  return s;
}

// the 14 triplets of the Promislow product table (rows and columns)
inline const std::vector<std::string>& promislow14_triplets() {
  static const std::vector<std::string> t{"0 0 2",   "0 0 -2",   "2^ 1 1^",  "2^ -1 -1^", "0^ 1 1^",
                                          "0^ 1 -1^", "0^ -1 1^", "0^ -1 -1^", "1 2^ 0^",  "-1 2^ 0^",
                                          "1 0^ -2^", "-1 0^ 2^", "1 0^ 0^",   "-1 0^ 0^"};
  return t;
}

inline FiniteSubset promislow14(const Group& G) {
  FiniteSubset s;
  for (auto& t : promislow14_triplets()) s.add(G, PromislowGroup::parse_triplet(t));
  return s;
}

inline FiniteSubset product_set(const Group& G, const FiniteSubset& A, const FiniteSubset& B) {
  FiniteSubset out;
  for (auto& a : A.elems)
    for (auto& b : B.elems) out.add(G, G.mul(a, b));
  return out;
}

inline bool kemperman_check(const Group& G, const FiniteSubset& A, const FiniteSubset& B) {
  return product_set(G, A, B).size() + 1 >= A.size() + B.size();
}

// ---------- Brailovsky-Freiman classification

enum class BFKind { Strict, Progression, Trivial, OtherEquality };

inline const char* bf_name(BFKind k) {
  switch (k) {
    case BFKind::Strict: return "strict";
    case BFKind::Progression: return "progression";
    case BFKind::Trivial: return "trivial";
    default: return "other-equality";
  }
}

struct BFResult {
  BFKind kind = BFKind::Strict;
  std::size_t ab = 0;
  // A = {g, gf, .., g f^{n-1}}, B = {h, fh, .., f^{m-1} h}
  Elem f, g, h;
  int n = 0, m = 0;
};

inline BFResult bf_classify(const Group& G, const FiniteSubset& A, const FiniteSubset& B) {
  BFResult r;
  r.ab = product_set(G, A, B).size();
  if (r.ab + 1 > A.size() + B.size()) return r;
  if (A.size() == 1 || B.size() == 1) {
    r.kind = BFKind::Trivial;
    return r;
  }
  r.n = static_cast<int>(A.size());
  r.m = static_cast<int>(B.size());
  // candidate ratios from A: f = a_i^-1 a_j
  std::vector<Elem> cands;
  std::unordered_set<std::string> seen;
  for (auto& x : A.elems)
    for (auto& y : A.elems) {
      Elem f = G.mul(G.inv(x), y);
      if (G.is_id(f) || !seen.insert(G.key(f)).second) continue;
      cands.push_back(f);
    }
  auto right_prog = [&](const Elem& f) -> std::optional<Elem> {
    for (auto& g : A.elems) {
      Elem cur = g;
      bool ok = true;
      for (int k = 1; k < r.n && ok; ++k) {
        cur = G.mul(cur, f);
        ok = A.contains(G, cur);
      }
      if (ok) return g;
    }
    return std::nullopt;
  };
  auto left_prog = [&](const Elem& f) -> std::optional<Elem> {
    for (auto& h : B.elems) {
      Elem cur = h;
      bool ok = true;
      for (int k = 1; k < r.m && ok; ++k) {
        cur = G.mul(f, cur);
        ok = B.contains(G, cur);
      }
      if (ok) return h;
    }
    return std::nullopt;
  };
  for (auto& f : cands) {
    auto g = right_prog(f);
    if (!g) continue;
    auto h = left_prog(f);
    if (!h) continue;
    r.kind = BFKind::Progression;
    r.f = f;
    r.g = *g;
    r.h = *h;
    return r;
  }
  r.kind = BFKind::OtherEquality;
  return r;
}

// ---------- unique products

struct UniqueProduct {
  Elem c, a, b;
};

inline std::vector<UniqueProduct> unique_products(const Group& G, const FiniteSubset& A, const FiniteSubset& B) {
  std::map<std::string, std::vector<std::pair<int, int>>> fac;
  std::vector<std::string> order;
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j) {
      std::string k = G.key(G.mul(A.elems[i], B.elems[j]));
      auto& v = fac[k];
      if (v.empty()) order.push_back(k);
      v.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  std::vector<UniqueProduct> out;
  for (auto& k : order) {
    auto& v = fac[k];
    if (v.size() != 1) continue;
    auto [i, j] = v[0];
    out.push_back({G.mul(A.elems[i], B.elems[j]), A.elems[i], B.elems[j]});
  }
  return out;
}

// multiplicity of each product value, in first-appearance order
inline std::vector<std::pair<Elem, int>> product_multiplicities(const Group& G, const FiniteSubset& A,
                                                                const FiniteSubset& B) {
  std::map<std::string, int> at;
  std::vector<std::pair<Elem, int>> out;
  for (auto& a : A.elems)
    for (auto& b : B.elems) {
      Elem c = G.mul(a, b);
      auto [it, fresh] = at.try_emplace(G.key(c), static_cast<int>(out.size()));
      if (fresh) out.push_back({c, 0});
      ++out[it->second].second;
    }
  return out;
}

// ---------- extremal points: f with fg, fg^-1 in A only for g = id

inline std::vector<Elem> extremal_points(const Group& G, const FiniteSubset& A) {
  if (A.size() == 0) throw ComputeError("extremal points need a nonempty set");
  std::vector<Elem> out;
  for (auto& f : A.elems) {
    bool ext = true;
    for (auto& a : A.elems) {
      if (G.equal(a, f)) continue;
      // g = f^-1 a, so f g^-1 = f a^-1 f
      if (A.contains(G, G.mul(f, G.mul(G.inv(a), f)))) {
        ext = false;
        break;
      }
    }
    if (ext) out.push_back(f);
  }
  return out;
}

// ---------- isoperimetric profile inside a ball

inline FiniteSubset boundary_of(const Group& G, const std::vector<Elem>& S, const FiniteSubset& Y) {
  FiniteSubset out;
  for (auto& s : S)
    for (auto& y : Y.elems) {
      Elem z = G.mul(s, y);
      if (!Y.contains(G, z)) out.add(G, z);
    }
  return out;
}

struct ProfileRow {
  int size = 0;
  int boundary = -1;
  std::vector<Word> witness;
  long long subsets = 0;
  bool complete = true;
};

struct Profile {
  std::vector<ProfileRow> rows;
  bool partial = false;
};

// gens: words of the generating set (identity allowed); boundary = SY \ Y
inline Profile iso_profile(const Group& G, const std::vector<Word>& gens, int max_size, int radius,
                           long long cap = 20'000'000) {
  if (max_size < 1) throw ComputeError("profile needs max size >= 1");
  int maxlen = 0;
  for (auto& s : gens) maxlen = std::max(maxlen, static_cast<int>(s.size()));
  BallIndex big(G, radius + maxlen);
  std::vector<int> inner;  // indices with length <= radius
  for (std::size_t i = 0; i < big.size(); ++i)
    if (big[i].length <= radius) inner.push_back(static_cast<int>(i));
  std::vector<Elem> S;
  for (auto& s : gens) S.push_back(G.eval(s));
  std::vector<std::vector<int>> nb(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i)
    for (auto& s : S) {
      int j = big.find(G.mul(s, big[inner[i]].elem));
      if (j < 0) throw ComputeError("internal: neighbour outside enlarged ball");
      nb[i].push_back(j);
    }
  Profile P;
  std::vector<int> stamp(big.size(), 0), inY(big.size(), 0);
  int clock = 0;
  int N = static_cast<int>(inner.size());
  for (int r = 1; r <= max_size && r <= N; ++r) {
    ProfileRow row;
    row.size = r;
    // right translation keeps SY \ Y's size, so Y may be assumed to contain id (index 0)
    std::vector<int> pick{0};
    std::vector<int> best;
    std::function<bool(int)> rec = [&](int next) -> bool {
      if (static_cast<int>(pick.size()) == r) {
        if (++row.subsets > cap) return false;
        ++clock;
        for (int i : pick) inY[inner[i]] = clock;
        int bd = 0;
        for (int i : pick)
          for (int j : nb[i])
            if (inY[j] != clock && stamp[j] != clock) {
              stamp[j] = clock;
              ++bd;
            }
        if (row.boundary < 0 || bd < row.boundary) {
          row.boundary = bd;
          best = pick;
        }
        return true;
      }
      for (int i = next; i < N; ++i) {
        if (N - i < r - static_cast<int>(pick.size())) break;
        pick.push_back(i);
        bool ok = rec(i + 1);
        pick.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    if (!rec(1)) {
      row.complete = false;
      P.partial = true;
    }
    for (int i : best) row.witness.push_back(big[inner[i]].word);
    P.rows.push_back(std::move(row));
    if (P.partial) break;
  }
  return P;
}

inline bool subadditive(const Profile& P) {
  auto val = [&](int r) { return P.rows[r - 1].boundary; };
  int n = static_cast<int>(P.rows.size());
  for (int a = 1; a <= n; ++a)
    for (int b = 1; a + b <= n; ++b)
      if (val(a + b) > val(a) + val(b)) return false;
  return true;
}

}  // namespace lorder
