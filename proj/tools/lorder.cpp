// lorder: command-line front end
#include "lorder/io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace lorder;

namespace {

struct Opts {
  std::string group, oracle, word, with, set, set2, format = "text", out, oracle2, k = "-2,2", x0 = "0";
  std::string points, slopes = "1,1", a = "0", b = "1", gens;
  int radius = 4, bound = 10, trials = 1, threads = 1, count = 10, max_size = 4, probe = 0;
  long steps = 1000, p = 100, trace = 0;
  std::uint64_t seed = 1;
  long long cap = 100000;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void need(bool ok, const std::string& what) {
  if (!ok) throw Usage(what);
}

GroupPtr grp(const Opts& o) {
  need(!o.group.empty(), "--group is required");
  return make_group(o.group);
}

OraclePtr orc(GroupPtr g, const Opts& o) {
  need(!o.oracle.empty(), "--oracle is required");
  return make_oracle(std::move(g), o.oracle);
}

void check_format(const Opts& o, std::initializer_list<const char*> ok) {
  for (auto* f : ok)
    if (o.format == f) return;
  std::string list;
  for (auto* f : ok) list += std::string(list.empty() ? "" : ", ") + f;
  throw Usage("unsupported --format '" + o.format + "' (use " + list + ")");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

// comma-separated words; [x y z] literals are Promislow triplets
FiniteSubset parse_set(const Group& G, const std::string& text) {
  if (text == "promislow14") {
    need(G.spec() == "promislow", "set promislow14 needs --group promislow");
    return promislow14(G);
  }
  FiniteSubset s;
  for (auto& part : split(text, ',')) {
    std::string t = trim(part);
    if (!t.empty() && t.front() == '[') {
      need(t.back() == ']' && G.spec() == "promislow", "bad triplet literal " + t);
      s.add(G, PromislowGroup::parse_triplet(t.substr(1, t.size() - 2)));
    } else {
      s.add(G, G.parse(t));
    }
  }
  return s;
}

std::string sgn_text(int s) { return s > 0 ? "+1" : s < 0 ? "-1" : "0"; }

std::string words_text(const Alphabet& A, const std::vector<Word>& ws) {
  std::string s;
  for (auto& w : ws) s += (s.empty() ? "" : ", ") + (w.empty() ? std::string("id") : A.format(w));
  return "{" + s + "}";
}

int run_cmd(const std::string& cmd, const Opts& o, std::ostream& out) {
  if (cmd == "sign") {
    check_format(o, {"text", "json"});
    auto G = grp(o);
    auto O = orc(G, o);
    int s = O->sign(G->parse(o.word));
    if (o.format == "json")
      out << json{{"group", G->spec()}, {"oracle", O->name()}, {"word", o.word}, {"sign", s}}.dump() << "\n";
    else
      out << sgn_text(s) << "\n";
    return 0;
  }
  if (cmd == "compare") {
    check_format(o, {"text"});
    auto G = grp(o);
    auto O = orc(G, o);
    int c = O->cmp(G->parse(o.word), G->parse(o.with));
    out << (c < 0 ? "<" : c > 0 ? ">" : "=") << "\n";
    return 0;
  }
  if (cmd == "reduce-braid") {
    check_format(o, {"text", "json"});
    auto G = grp(o);
    auto& B = group_as<BraidGroup>(*G, "reduce-braid");
    HandleStats st;
    Word r = handle_reduce(G->alphabet().parse(o.word), B.strands(), &st);
    auto m = main_index(r);
    if (o.format == "json") {
      out << json{{"reduced", G->alphabet().format(r)},
                  {"main_index", m.index < 0 ? 0 : m.index + 1},
                  {"sign", m.sign},
                  {"steps", st.steps}}
                 .dump()
          << "\n";
    } else {
      out << (r.empty() ? "id" : G->alphabet().format(r)) << "\n";
    }
    return 0;
  }
  if (cmd == "enumerate-cones") {
    check_format(o, {"text", "json"});
    auto G = grp(o);
    auto E = enumerate_ball_cones(*G, o.radius, o.cap);
    if (o.format == "json") {
      json a = json::array();
      for (auto& c : E.cones) a.push_back(cone_json(c));
      out << json{{"count", E.cones.size()}, {"capped", E.capped}, {"cones", a}}.dump() << "\n";
    } else {
      out << E.cones.size() << " ball-consistent cones at radius " << o.radius << " (upper approximation)"
          << (E.capped ? ", search capped" : "") << "\n";
    }
    return 0;
  }
  if (cmd == "distance") {
    check_format(o, {"text", "json"});
    auto G = grp(o);
    auto O1 = orc(G, o);
    need(!o.oracle2.empty(), "--oracle2 is required");
    auto O2 = make_oracle(G, o.oracle2);
    BallIndex B(*G, o.radius);
    auto d = distance(ball_cone(*O1, B), ball_cone(*O2, B));
    if (o.format == "json")
      out << json{{"agree_radius", d.agree_radius}, {"value", qstr(d.value)}, {"exact", d.exact}}.dump() << "\n";
    else
      out << (d.exact ? "<= " : "") << "2^-" << d.agree_radius << "\n";
    return 0;
  }
  if (cmd == "compatible-signs") {
    check_format(o, {"text", "json"});
    auto G = grp(o);
    auto S = parse_set(*G, o.set);
    auto r = compatible_signs(*G, S.elems, o.bound);
    if (r.eta) {
      std::string s;
      for (int e : *r.eta) s += e > 0 ? '+' : '-';
      out << (o.format == "json" ? json{{"eta", s}}.dump() : "eta = " + s) << "\n";
      return 0;
    }
    if (o.format == "json") {
      json w = json::array();
      for (auto& x : r.witnesses) w.push_back({{"eta", x.eta}, {"factors", x.factors}});
      out << json{{"eta", nullptr}, {"witnesses", w}}.dump() << "\n";
    } else {
      out << "NONE\n";
      for (auto& x : r.witnesses) {
        out << "  eta=";
        for (int e : x.eta) out << (e > 0 ? '+' : '-');
        out << ":";
        for (int f : x.factors) out << " [" << G->show(S.elems[f]) << "]^" << x.eta[f];
        out << " = id\n";
      }
    }
    return 0;
  }
  if (cmd == "realize") {
    check_format(o, {"text", "json", "svg"});
    auto G = grp(o);
    auto O = orc(G, o);
    auto R = realize(*O, o.count);
    if (o.format == "svg") {
      out << realization_svg(R);
    } else if (o.format == "json") {
      out << realization_json(R).dump() << "\n";
    } else {
      for (std::size_t i = 0; i < R.t.size(); ++i) out << R.labels[i] << "\t" << qstr(R.t[i]) << "\n";
    }
    return 0;
  }
  if (cmd == "crossing") {
    check_format(o, {"text", "json"});
    auto G = grp(o);
    auto O = orc(G, o);
    auto c = find_crossing(*O, o.radius, o.bound);
    auto& A = G->alphabet();
    auto f = [&](const Word& w) { return w.empty() ? std::string("id") : A.format(w); };
    if (!c) {
      out << (o.format == "json" ? "null" : "NONE") << "\n";
      return 0;
    }
    if (o.format == "json")
      out << json{{"f", f(c->f)}, {"g", f(c->g)}, {"u", f(c->u)}, {"v", f(c->v)}, {"w", f(c->w)}, {"M", c->M},
                  {"N", c->N}}
                 .dump()
          << "\n";
    else
      out << "(" << f(c->f) << ", " << f(c->g) << "; " << f(c->u) << ", " << f(c->v) << ", " << f(c->w)
          << ") M=" << c->M << " N=" << c->N << "\n";
    return 0;
  }
  if (cmd == "conradian") {
    check_format(o, {"text", "json"});
    auto G = grp(o);
    auto O = orc(G, o);
    auto w = conradian_violation(*O, o.radius);
    auto& A = G->alphabet();
    if (o.format == "json") {
      json j{{"conradian", !w}};
      if (w) j["witness"] = {A.format(w->f), A.format(w->g)};
      out << j.dump() << "\n";
    } else if (w) {
      out << "false: f=" << A.format(w->f) << " g=" << A.format(w->g) << " with f g^2 <= g\n";
    } else {
      out << "true\n";
    }
    return 0;
  }
  if (cmd == "soul") {
    check_format(o, {"text", "json"});
    auto G = grp(o);
    auto O = orc(G, o);
    auto s = conradian_soul_ball(*O, o.radius, o.bound);
    if (o.format == "json") {
      json m = json::array();
      for (auto& w : s.members) m.push_back(G->alphabet().format(w));
      out << json{{"radius", o.radius}, {"approximation", "ball"}, {"members", m}}.dump() << "\n";
    } else {
      out << words_text(G->alphabet(), s.members) << " (ball approximation, radius " << o.radius << ")\n";
    }
    return 0;
  }
  if (cmd == "holder") {
    check_format(o, {"text"});
    auto G = grp(o);
    auto O = orc(G, o);
    Q q = holder_estimate(*O, G->parse(o.word), G->parse(o.with), o.p);
    out << qstr(q) << "\n";
    return 0;
  }
  if (cmd == "verbal") {
    check_format(o, {"text", "json"});
    Alphabet ab({"a", "b"});
    auto c = build_verbal_counterexample(ab.parse(o.word));
    if (o.format == "json") {
      out << json{{"f", pl_json(c.f)}, {"g", pl_json(c.g)}, {"f0", qstr(c.f0)}, {"g0", qstr(c.g0)},
                  {"W0", qstr(c.w0)}}
                 .dump()
          << "\n";
    } else {
      out << "f = " << c.f.str() << "\ng = " << c.g.str() << "\nf(0) = " << qstr(c.f0) << ", g(0) = " << qstr(c.g0)
          << ", W(f,g)(0) = " << qstr(c.w0) << "\n";
    }
    return 0;
  }
  if (cmd == "product-set") {
    check_format(o, {"text", "json", "csv"});
    auto G = grp(o);
    auto A = parse_set(*G, o.set);
    auto B = o.set2.empty() ? A : parse_set(*G, o.set2);
    if (o.format == "csv") {
      out << product_table_csv(*G, A, B);
      return 0;
    }
    auto r = bf_classify(*G, A, B);
    bool kem = r.ab + 1 >= A.size() + B.size();
    if (o.format == "json")
      out << json{{"A", A.size()}, {"B", B.size()}, {"AB", r.ab}, {"kemperman", kem}, {"class", bf_name(r.kind)}}
                 .dump()
          << "\n";
    else
      out << "|A|=" << A.size() << " |B|=" << B.size() << " |AB|=" << r.ab << " kemperman=" << (kem ? "ok" : "FAIL")
          << " " << bf_name(r.kind) << (r.kind == BFKind::Progression ? " f=" + G->show(r.f) : "") << "\n";
    return 0;
  }
  if (cmd == "upp") {
    check_format(o, {"text", "json"});
    auto G = grp(o);
    auto A = parse_set(*G, o.set);
    auto B = o.set2.empty() ? A : parse_set(*G, o.set2);
    auto u = unique_products(*G, A, B);
    std::size_t tot = A.size() * B.size();
    if (o.format == "json") {
      json l = json::array();
      for (auto& x : u) l.push_back({G->show(x.c), G->show(x.a), G->show(x.b)});
      out << json{{"unique", l}, {"pairs", tot}}.dump() << "\n";
    } else if (u.empty()) {
      out << "no unique products (0 of " << tot << ")\n";
    } else {
      out << u.size() << " unique products (" << u.size() << " of " << tot << ")\n";
      for (auto& x : u) out << "  " << G->show(x.c) << " = " << G->show(x.a) << " * " << G->show(x.b) << "\n";
    }
    return 0;
  }
  if (cmd == "extremal") {
    check_format(o, {"text"});
    auto G = grp(o);
    auto A = parse_set(*G, o.set);
    auto e = extremal_points(*G, A);
    out << e.size() << " extremal of " << A.size() << "\n";
    for (auto& x : e) out << "  " << G->show(x) << "\n";
    return 0;
  }
  if (cmd == "profile") {
    check_format(o, {"text", "csv"});
    auto G = grp(o);
    std::vector<Word> S{Word()};
    if (o.gens.empty()) {
      for (int i = 0; i < G->rank(); ++i) {
        S.push_back(Word::gen(i, 1));
        S.push_back(Word::gen(i, -1));
      }
    } else {
      for (auto& t : split(o.gens, ',')) S.push_back(G->alphabet().parse(t));
    }
    auto P = iso_profile(*G, S, o.max_size, o.radius, o.cap);
    if (o.format == "csv") {
      out << profile_csv(P);
    } else {
      out << "upper bound on I (subsets of the radius-" << o.radius << " ball)" << (P.partial ? ", partial" : "")
          << "\n";
      for (auto& r : P.rows) out << "  " << r.size << ": " << r.boundary << "\n";
    }
    return 0;
  }
  if (cmd == "walk") {
    check_format(o, {"text", "json", "svg"});
    auto G = grp(o);
    LineAction A;
    if (G->spec() == "zn:1")
      A = translation_action();
    else if (auto* bs = dynamic_cast<const BSGroup*>(G.get()))
      A = bs_affine_action(bs->l());
    else
      throw Usage("walk supports zn:1 and bs:l");
    auto kk = split(o.k, ',');
    need(kk.size() == 2, "--K expects lo,hi");
    WalkConfig cfg;
    cfg.rho = uniform_symmetric(G->rank());
    cfg.x0 = parse_q(o.x0);
    cfg.steps = o.steps;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.trace_every = o.format == "svg" ? std::max<long>(1, o.steps / 1000) : 0;
    auto R = simulate(A, cfg, parse_q(kk[0]), parse_q(kk[1]));
    if (o.format == "json") {
      out << walk_json(R).dump() << "\n";
    } else if (o.format == "svg") {
      out << walk_svg(R);
    } else {
      long vis = 0, osc = 0;
      for (auto& t : R.trials) {
        vis += t.visits > 0;
        osc += t.max > 1000 && t.min < -1000;
      }
      out << "seed " << R.seed << ": " << vis << " of " << R.trials.size() << " trials visit K; " << osc
          << " reach beyond +-1000" << (R.rounded ? " (rounded arithmetic)" : "") << "\n";
    }
    return 0;
  }
  if (cmd == "drift-check") {
    check_format(o, {"text", "json"});
    std::vector<PLHomeo::Pt> pts;
    for (auto& t : split(o.points, ' ')) {
      if (trim(t).empty()) continue;
      auto xy = split(t, ':');
      need(xy.size() == 2, "--points expects x:y tokens");
      pts.push_back({parse_q(xy[0]), parse_q(xy[1])});
    }
    auto sl = split(o.slopes, ',');
    need(sl.size() == 2, "--slopes expects left,right");
    PLHomeo h(pts, parse_q(sl[0]), parse_q(sl[1]));
    auto d = drift_identity_check(h, parse_q(o.a), parse_q(o.b));
    if (o.format == "json")
      out << json{{"lhs", qstr(d.lhs)}, {"rhs", qstr(d.rhs)}, {"equal", d.equal()}}.dump() << "\n";
    else
      out << "lhs = " << qstr(d.lhs) << ", rhs = " << qstr(d.rhs) << (d.equal() ? " (equal)" : " (MISMATCH)") << "\n";
    return d.equal() ? 0 : 2;
  }
  if (cmd == "verify-relation") {
    check_format(o, {"text"});
    auto G = grp(o);
    bool eq = verify_relation(*G, o.word, o.with);
    out << (eq ? "true" : "false") << "\n";
    return 0;
  }
  throw Usage("unknown subcommand " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  install_dynlex_loader();
  CLI::App app{"lorder: left-orderable groups toolkit"};
  app.require_subcommand(1);
  Opts o;
  std::string used;
  const char* cmds[][2] = {
      {"sign", "sign of a word under an oracle"},
      {"compare", "compare --word with --with"},
      {"reduce-braid", "handle reduction of a braid word"},
      {"enumerate-cones", "ball-consistent positive cones"},
      {"distance", "ultrametric distance between two oracles"},
      {"compatible-signs", "compatible exponents for a finite set"},
      {"realize", "dynamical realization"},
      {"crossing", "search a crossing in a ball"},
      {"conradian", "Conrad property on a ball"},
      {"soul", "Conradian soul, ball approximation"},
      {"holder", "Hoelder estimate q/p"},
      {"verbal", "PL counterexample for a mixed-sign word"},
      {"product-set", "product set, Kemperman and BF class"},
      {"upp", "unique products"},
      {"extremal", "extremal points"},
      {"profile", "isoperimetric profile inside a ball"},
      {"walk", "random walk statistics"},
      {"drift-check", "exact drift identity"},
      {"verify-relation", "check --word = --with in the group"},
  };
  for (auto& c : cmds) {
    auto* s = app.add_subcommand(c[0], c[1]);
    s->add_option("--group", o.group, "group spec (free:2, braid:3, ...)");
    s->add_option("--oracle", o.oracle, "oracle spec");
    s->add_option("--oracle2", o.oracle2, "second oracle (distance)");
    s->add_option("--word", o.word, "word text");
    s->add_option("--with", o.with, "second word");
    s->add_option("--set", o.set, "comma-separated words, or promislow14");
    s->add_option("--set2", o.set2, "second set");
    s->add_option("--radius", o.radius, "ball radius")->check(CLI::NonNegativeNumber);
    s->add_option("--bound", o.bound, "exponent or length bound")->check(CLI::PositiveNumber);
    s->add_option("--count", o.count, "realization size")->check(CLI::PositiveNumber);
    s->add_option("--p", o.p, "power of g (holder)")->check(CLI::PositiveNumber);
    s->add_option("--max-size", o.max_size, "largest |Y| (profile)")->check(CLI::PositiveNumber);
    s->add_option("--gens", o.gens, "generating words for the profile, comma-separated");
    s->add_option("--cap", o.cap, "search cap");
    s->add_option("--seed", o.seed, "64-bit seed");
    s->add_option("--trials", o.trials, "walk trials")->check(CLI::PositiveNumber);
    s->add_option("--steps", o.steps, "walk steps")->check(CLI::PositiveNumber);
    s->add_option("--x0", o.x0, "walk start");
    s->add_option("--K", o.k, "walk target interval lo,hi");
    s->add_option("--points", o.points, "PL data 'x:y x:y ...'");
    s->add_option("--slopes", o.slopes, "PL tail slopes left,right");
    s->add_option("--a", o.a, "interval start");
    s->add_option("--b", o.b, "interval end");
    s->add_option("--format", o.format, "text, json, csv or svg");
    s->add_option("--threads", o.threads, "thread cap (work here is serial)")->check(CLI::PositiveNumber);
    s->add_option("--out", o.out, "write report to FILE");
    s->callback([&used, name = std::string(c[0])] { used = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  try {
    std::ostringstream buf;
    int rc = run_cmd(used, o, buf);
    if (!o.out.empty()) {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw Usage("cannot write " + o.out);
      f << buf.str();
    } else {
      std::cout << buf.str();
    }
    return rc;
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const ComputeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
