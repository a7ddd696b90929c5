#pragma once

#include "groups.hpp"
#include "pl.hpp"

#include <gmp.h>

#include <random>
#include <string>
#include <vector>

namespace lorder {

// generator maps acting on the line; a word acts right to left
struct LineAction {
  GroupPtr group;
  std::vector<PLHomeo> gens;

  Q apply(const Word& w, const Q& x) const {
    Q y = x;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
      y = it->sign > 0 ? gens[it->gen](y) : gens[it->gen].inv(y);
    return y;
  }
  PLHomeo map_of(const Word& w) const {
    PLHomeo h;
    for (auto& l : w) h = compose(h, l.sign > 0 ? gens[l.gen] : gens[l.gen].inverse());
    return h;
  }
};

inline LineAction translation_action() {
  return {make_group("zn:1"), {PLHomeo::affine(Q(1), Q(1))}};
}

// g = x + 1, h = l x, matching the bs group's generator order
inline LineAction bs_affine_action(long l) {
  return {make_group("bs:" + std::to_string(l)), {PLHomeo::affine(Q(1), Q(1)), PLHomeo::affine(Q(l), Q(0))}};
}

inline LineAction action_from_maps(GroupPtr g, std::vector<PLHomeo> maps) {
  if (static_cast<int>(maps.size()) != g->rank()) throw ComputeError("one map per generator expected");
  return {std::move(g), std::move(maps)};
}

// relation check at pseudo-random rational points
struct RelationCheck {
  bool holds = true;
  Q witness;
  int samples = 0;
};

inline RelationCheck verify_relation(const LineAction& A, const Word& rel, int samples = 50, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-10000, 10000), den(1, 97);
  RelationCheck r;
  for (int i = 0; i < samples; ++i) {
    Q x = qnorm(Q(num(rng), den(rng)));
    ++r.samples;
    if (A.apply(rel, x) != x) {
      r.holds = false;
      r.witness = x;
      return r;
    }
  }
  return r;
}

struct WalkConfig {
  std::vector<std::pair<Word, Q>> rho;
  Q x0 = 0;
  long steps = 1000;
  int trials = 1;
  std::uint64_t seed = 1;
  long trace_every = 0;  // record trial 0 every k steps when > 0
  // denominator guard; past it the point is rounded down to a multiple of 2^-128
  std::size_t max_den_bits = 8192;
};

inline void validate_rho(const std::vector<std::pair<Word, Q>>& rho) {
  if (rho.empty()) throw ComputeError("empty support");
  Q total = 0;
  for (auto& [w, p] : rho) {
    if (p <= 0) throw ComputeError("weights must be positive");
    total += p;
  }
  if (total != 1) throw ComputeError("weights must sum to 1, got " + qstr(qnorm(total)));
  for (auto& [w, p] : rho) {
    Word wi = w.inverse();
    bool ok = false;
    for (auto& [v, q] : rho)
      if (v == wi && q == p) ok = true;
    if (!ok) throw ComputeError("measure is not symmetric at " + w.key());
  }
}

inline std::vector<std::pair<Word, Q>> uniform_symmetric(int rank) {
  std::vector<std::pair<Word, Q>> rho;
  Q p(1, 2 * rank);
  for (int i = 0; i < rank; ++i) {
    rho.push_back({Word::gen(i, 1), p});
    rho.push_back({Word::gen(i, -1), p});
  }
  return rho;
}

struct TrialStats {
  Q max, min;
  long first_return = -1;
  long visits = 0;
  double occupation = 0;
  bool rounded = false;
};

struct WalkReport {
  std::uint64_t seed = 0;
  long steps = 0;
  Q x0, k_lo, k_hi;
  std::vector<TrialStats> trials;
  bool rounded = false;
  std::vector<std::pair<long, double>> trace;
};

// affine fast path: y = s x + t
struct StepMap {
  bool affine = false;
  mpq_class s, t;
  PLHomeo pl;
};

inline void round_fixed(mpq_class& x) {
  // nearest multiple of 2^-128 from below
  mpz_class n;
  mpz_class num = x.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 128);
  mpz_fdiv_q(n.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, 128);
  x = mpq_class(n, d);
  x.canonicalize();
}

inline WalkReport simulate(const LineAction& A, const WalkConfig& cfg, const Q& klo, const Q& khi) {
  validate_rho(cfg.rho);
  if (!(klo < khi)) throw ComputeError("K must be a nondegenerate interval");
  for (auto& [w, p] : cfg.rho)
    if (!(A.apply(w, klo) < khi))
      throw ComputeError("K condition fails: g(A) >= B for g = " + A.group->alphabet().format(w));
  std::vector<StepMap> maps;
  mpz_class L = 1;
  for (auto& [w, p] : cfg.rho) {
    StepMap m;
    m.pl = A.map_of(w);
    if (m.pl.points().size() == 1 && m.pl.left_slope() == m.pl.right_slope()) {
      m.affine = true;
      m.s = m.pl.left_slope();
      m.t = m.pl(Q(0));
    }
    maps.push_back(std::move(m));
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), p.get_den().get_mpz_t());
  }
  if (!L.fits_ulong_p()) throw ComputeError("weight denominators too large");
  std::vector<unsigned long> cum;
  unsigned long run = 0;
  for (auto& [w, p] : cfg.rho) {
    mpz_class c = p.get_num() * (L / p.get_den());
    run += c.get_ui();
    cum.push_back(run);
  }
  WalkReport R;
  R.seed = cfg.seed;
  R.steps = cfg.steps;
  R.x0 = cfg.x0;
  R.k_lo = klo;
  R.k_hi = khi;
  for (int tr = 0; tr < cfg.trials; ++tr) {
    std::seed_seq sq{static_cast<std::uint32_t>(cfg.seed & 0xffffffffu), static_cast<std::uint32_t>(cfg.seed >> 32),
                     static_cast<std::uint32_t>(tr)};
    std::mt19937_64 rng(sq);
    std::uniform_int_distribution<unsigned long> pick(0, run - 1);
    TrialStats T;
    mpq_class x = cfg.x0, tmp;
    T.max = x;
    T.min = x;
    for (long n = 1; n <= cfg.steps; ++n) {
      unsigned long r = pick(rng);
      std::size_t k = std::upper_bound(cum.begin(), cum.end(), r) - cum.begin();
      const StepMap& m = maps[k];
      if (m.affine) {
        if (m.s != 1) mpq_mul(x.get_mpq_t(), x.get_mpq_t(), m.s.get_mpq_t());
        if (m.t != 0) mpq_add(x.get_mpq_t(), x.get_mpq_t(), m.t.get_mpq_t());
      } else {
        x = m.pl(x);
      }
      if (mpz_sizeinbase(x.get_den_mpz_t(), 2) > cfg.max_den_bits) {
        round_fixed(x);
        T.rounded = true;
      }
      if (x > T.max) T.max = x;
      if (x < T.min) T.min = x;
      if (tr == 0 && cfg.trace_every > 0 && n % cfg.trace_every == 0) R.trace.push_back({n, x.get_d()});
      if (x >= klo && x <= khi) {
        ++T.visits;
        if (T.first_return < 0) T.first_return = n;
      }
    }
    T.occupation = cfg.steps ? static_cast<double>(T.visits) / static_cast<double>(cfg.steps) : 0.0;
    R.rounded = R.rounded || T.rounded;
    R.trials.push_back(std::move(T));
  }
  return R;
}

// ---------- drift identity

inline Q delta_area(const PLHomeo& h, const Q& c) {
  Q hc = h(c);
  if (hc >= c) return h.offset_integral(h.inv(c), c, c);
  return h.inverse().offset_integral(hc, c, c);
}

struct DriftCheck {
  Q lhs, rhs, delta_a, delta_b;
  bool equal() const { return lhs == rhs; }
};

inline DriftCheck drift_identity_check(const PLHomeo& h, const Q& a, const Q& b) {
  if (!(a < b)) throw ComputeError("drift check needs a < b");
  DriftCheck d;
  d.lhs = qnorm(h.displacement_integral(a, b) + h.inverse().displacement_integral(a, b));
  d.delta_a = qnorm(delta_area(h, a));
  d.delta_b = qnorm(delta_area(h, b));
  d.rhs = qnorm(d.delta_b - d.delta_a);
  return d;
}

// breakpoints in [-10, 10], slopes from {1/3, 1/2, 1, 2, 3}
inline PLHomeo random_pl(std::mt19937_64& rng) {
  static const Q slopes[] = {Q(1, 3), Q(1, 2), Q(1), Q(2), Q(3)};
  std::uniform_int_distribution<int> nbp(1, 6), sl(0, 4), num(-100, 100), den(1, 10);
  int n = nbp(rng);
  std::vector<Q> xs;
  while (static_cast<int>(xs.size()) < n) {
    Q x = qnorm(Q(num(rng), den(rng)));
    if (x < -10 || x > 10) continue;
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<PLHomeo::Pt> pts;
  Q y = qnorm(Q(num(rng), den(rng)) / 10);
  pts.push_back({xs[0], y});
  for (std::size_t i = 1; i < xs.size(); ++i) {
    y = qnorm(y + slopes[sl(rng)] * (xs[i] - xs[i - 1]));
    pts.push_back({xs[i], y});
  }
  return PLHomeo(pts, slopes[sl(rng)], slopes[sl(rng)]);
}

// ---------- Derriennic defect and harmonic Lipschitz bound

inline Q derriennic_defect(const LineAction& A, const std::vector<std::pair<Word, Q>>& rho,
                           const std::vector<Q>& samples) {
  Q worst = 0;
  for (auto& x : samples) {
    Q s = 0;
    for (auto& [w, p] : rho) s += p * A.apply(w, x);
    Q d = abs(Q(s - x));
    if (d > worst) worst = d;
  }
  return qnorm(worst);
}

struct DisplacementCheck {
  bool lipschitz_ok = true;
  Q sup_displacement = 0;
};

inline DisplacementCheck displacement_bound_check(const LineAction& A, const std::vector<std::pair<Word, Q>>& rho,
                                                  std::vector<Q> grid) {
  if (derriennic_defect(A, rho, grid) != 0) throw ComputeError("action is not harmonic on the grid");
  std::sort(grid.begin(), grid.end());
  DisplacementCheck r;
  for (auto& [w, p] : rho) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      Q gi = A.apply(w, grid[i]);
      Q d = abs(Q(gi - grid[i]));
      if (d > r.sup_displacement) r.sup_displacement = d;
      for (std::size_t j = i + 1; j < grid.size(); ++j)
        if (A.apply(w, grid[j]) - gi > (grid[j] - grid[i]) / p) r.lipschitz_ok = false;
    }
  }
  r.sup_displacement = qnorm(r.sup_displacement);
  return r;
}

}  // namespace lorder
