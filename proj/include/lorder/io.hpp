#pragma once

#include "combinatorics.hpp"
#include "dynamics.hpp"
#include "order_space.hpp"
#include "orders.hpp"
#include "walks.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace lorder {

using json = nlohmann::ordered_json;

inline json cone_json(const BallCone& c) {
  json e = json::array();
  for (std::size_t i = 0; i < c.words.size(); ++i)
    e.push_back({c.alpha ? c.alpha->format(c.words[i]) : c.words[i].key(), c.signs[i]});
  return {{"version", 1}, {"group", c.group}, {"radius", c.radius}, {"entries", e}};
}

inline json pl_json(const PLHomeo& h) {
  json pts = json::array();
  for (auto& p : h.points()) pts.push_back({qstr(p.x), qstr(p.y)});
  return {{"points", pts}, {"left_slope", qstr(h.left_slope())}, {"right_slope", qstr(h.right_slope())}};
}

inline PLHomeo pl_from_json(const json& j) {
  std::vector<PLHomeo::Pt> pts;
  for (auto& p : j.at("points")) pts.push_back({parse_q(p.at(0).get<std::string>()), parse_q(p.at(1).get<std::string>())});
  Q sl = j.contains("left_slope") ? parse_q(j["left_slope"].get<std::string>()) : Q(1);
  Q sr = j.contains("right_slope") ? parse_q(j["right_slope"].get<std::string>()) : Q(1);
  return PLHomeo(pts, sl, sr);
}

inline json realization_json(const Realization& R) {
  json pts = json::array(), gens = json::array();
  for (std::size_t i = 0; i < R.t.size(); ++i) pts.push_back({R.labels[i], qstr(R.t[i])});
  for (auto& g : R.gens) gens.push_back(pl_json(g));
  return {{"points", pts}, {"generators", gens}};
}

inline std::string fmt_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// graphs of the generator maps over the realized window
inline std::string realization_svg(const Realization& R) {
  double lo = 0, hi = 0;
  for (auto& t : R.t) {
    lo = std::min(lo, t.get_d());
    hi = std::max(hi, t.get_d());
  }
  lo -= 1;
  hi += 1;
  const double W = 400;
  auto sx = [&](double x) { return fmt_num((x - lo) / (hi - lo) * W); };
  auto sy = [&](double y) { return fmt_num(W - (y - lo) / (hi - lo) * W); };
  static const char* colors[] = {"#c0392b", "#2471a3", "#229954", "#7d3c98", "#b9770e"};
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  o << "<!-- lorder realization v1 -->\n";
  o << "<line x1=\"" << sx(lo) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(hi) << "\" y2=\"" << sy(0)
    << "\" stroke=\"#999\"/>\n";
  o << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(lo) << "\" x2=\"" << sx(0) << "\" y2=\"" << sy(hi)
    << "\" stroke=\"#999\"/>\n";
  o << "<line x1=\"" << sx(lo) << "\" y1=\"" << sy(lo) << "\" x2=\"" << sx(hi) << "\" y2=\"" << sy(hi)
    << "\" stroke=\"#ccc\" stroke-dasharray=\"4 3\"/>\n";
  for (std::size_t k = 0; k < R.gens.size(); ++k) {
    const PLHomeo& g = R.gens[k];
    std::vector<double> xs{lo, hi};
    for (auto& p : g.points()) {
      double x = p.x.get_d();
      if (x > lo && x < hi) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    o << "<polyline fill=\"none\" stroke=\"" << colors[k % 5] << "\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      double y = g(Q(xs[i])).get_d();
      o << (i ? " " : "") << sx(xs[i]) << "," << sy(y);
    }
    o << "\"/>\n";
    for (auto& p : g.points()) {
      double x = p.x.get_d(), y = p.y.get_d();
      if (x > lo && x < hi && y > lo && y < hi)
        o << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"2\" fill=\"" << colors[k % 5] << "\"/>\n";
    }
  }
  o << "</svg>\n";
  return o.str();
}

inline json walk_json(const WalkReport& R) {
  json trials = json::array();
  for (auto& t : R.trials)
    trials.push_back({{"max", t.max.get_d()},
                      {"min", t.min.get_d()},
                      {"first_return", t.first_return},
                      {"visits", t.visits},
                      {"occupation", t.occupation},
                      {"rounded", t.rounded}});
  long visited = 0;
  for (auto& t : R.trials) visited += t.visits > 0;
  return {{"seed", R.seed},
          {"steps", R.steps},
          {"x0", qstr(R.x0)},
          {"K", {qstr(R.k_lo), qstr(R.k_hi)}},
          {"rng", "mt19937_64/seed_seq(seed_lo,seed_hi,trial)"},
          {"rounded_arithmetic", R.rounded},
          {"trials_visiting_K", visited},
          {"trials", trials}};
}

inline std::string walk_svg(const WalkReport& R) {
  if (R.trace.empty()) return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"300\"/>\n";
  double lo = R.k_lo.get_d(), hi = R.k_hi.get_d();
  for (auto& [n, x] : R.trace) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (hi == lo) hi = lo + 1;
  double N = static_cast<double>(R.trace.back().first);
  auto sx = [&](double n) { return fmt_num(n / N * 600); };
  auto sy = [&](double y) { return fmt_num(300 - (y - lo) / (hi - lo) * 300); };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"300\" viewBox=\"0 0 600 300\">\n";
  o << "<!-- lorder walk trace v1 -->\n";
  double klo = R.k_lo.get_d(), khi = R.k_hi.get_d();
  o << "<rect x=\"0\" y=\"" << sy(khi) << "\" width=\"600\" height=\""
    << fmt_num((khi - klo) / (hi - lo) * 300) << "\" fill=\"#f5cba7\"/>\n";
  o << "<polyline fill=\"none\" stroke=\"#2471a3\" points=\"";
  for (std::size_t i = 0; i < R.trace.size(); ++i)
    o << (i ? " " : "") << sx(static_cast<double>(R.trace[i].first)) << "," << sy(R.trace[i].second);
  o << "\"/>\n</svg>\n";
  return o.str();
}

inline std::string profile_csv(const Profile& P) {
  std::ostringstream o;
  o << "size,min_boundary,subsets,complete\n";
  for (auto& r : P.rows) o << r.size << "," << r.boundary << "," << r.subsets << "," << (r.complete ? 1 : 0) << "\n";
  return o.str();
}

// m x n product table, rows A, columns B
inline std::string product_table_csv(const Group& G, const FiniteSubset& A, const FiniteSubset& B) {
  std::ostringstream o;
  o << "row";
  for (auto& b : B.elems) o << "," << G.show(b);
  o << "\n";
  for (auto& a : A.elems) {
    o << G.show(a);
    for (auto& b : B.elems) o << "," << G.show(G.mul(a, b));
    o << "\n";
  }
  return o.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// {"generators": [pl...], "points": ["0", ...], "marks": [1, ...]}
inline OraclePtr load_dynlex(GroupPtr g, const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (json::exception& e) {
    throw ParseError(std::string("dynlex file: ") + e.what());
  }
  std::vector<PLHomeo> gens;
  for (auto& x : j.at("generators")) gens.push_back(pl_from_json(x));
  std::vector<Q> pts;
  for (auto& x : j.at("points")) pts.push_back(parse_q(x.get<std::string>()));
  std::vector<int> marks;
  if (j.contains("marks"))
    for (auto& x : j["marks"]) marks.push_back(x.get<int>());
  if (static_cast<int>(gens.size()) != g->rank()) throw ParseError("dynlex file: wrong number of generators");
  return std::make_shared<DynLexOracle>(g, std::move(gens), std::move(pts), std::move(marks));
}

inline void install_dynlex_loader() { dynlex_loader() = load_dynlex; }

}  // namespace lorder
