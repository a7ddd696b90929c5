#include "lorder/catalog.hpp"
#include "lorder/order_space.hpp"
#include "lorder/orders.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace lorder;

namespace {

// truncated series as a map monomial -> coefficient, multiplied naively
using Series = std::map<std::string, long long>;

Series series_mul(const Series& a, const Series& b, int D) {
  Series r;
  for (auto& [m1, c1] : a)
    for (auto& [m2, c2] : b)
      if (static_cast<int>(m1.size() + m2.size()) <= D) r[m1 + m2] += c1 * c2;
  return r;
}

Series letter_series(int gen, int sign, int D) {
  std::string x(1, gen ? 'Y' : 'X');
  Series s{{"", 1}};
  if (sign > 0) {
    s[x] = 1;
  } else {
    std::string p;
    for (int d = 1; d <= D; ++d) {
      p += x;
      s[p] = d % 2 ? -1 : 1;
    }
  }
  return s;
}

Series series_of(const Word& w, int D) {
  Series s{{"", 1}};
  for (auto& l : w) s = series_mul(s, letter_series(l.gen, l.sign, D), D);
  return s;
}

long long coef(const NCPoly& p, const std::string& mono) {
  std::vector<int> m;
  for (char c : mono) m.push_back(c == 'Y');
  return p.coef(m);
}

}  // namespace

TEST(Orders, QuadParsing) {
  auto chk = [](const char* t, Q p, Q q, long d) {
    Quad x = parse_quad(t);
    EXPECT_TRUE(x == Quad(p, q, d)) << t;
  };
  chk("sqrt2", 0, 1, 2);
  chk("-1*sqrt2", 0, -1, 2);
  chk("1/10*sqrt2", 0, Q(1, 10), 2);
  chk("2-sqrt5", 2, -1, 5);
  chk("-2+1*sqrt5", -2, 1, 5);
  chk("1+3/4*sqrt3", 1, Q(3, 4), 3);
  EXPECT_TRUE(parse_quad("-3/4") == Quad(Q(-3, 4)));
  EXPECT_THROW(parse_quad("1sqrt2"), ParseError);
  EXPECT_THROW(parse_quad(""), ParseError);
}

TEST(Orders, HandleReduction) {
  auto G = make_group("braid:3");
  auto& A = G->alphabet();
  EXPECT_TRUE(handle_reduce(A.parse("s1 s2 s1 s2^-1 s1^-1 s2^-1"), 3).empty());
  Word r = handle_reduce(A.parse("s2^-1 s1 s2"), 3);
  auto m = main_index(r);
  EXPECT_EQ(m.index, 0);
  EXPECT_EQ(m.sign, 1);
  Word n = handle_reduce(A.parse("s2^-3"), 3);
  EXPECT_EQ(n, A.parse("s2^-3"));
  EXPECT_EQ(main_index(n).index, 1);
  EXPECT_EQ(main_index(n).sign, -1);
}

TEST(Orders, HandleReductionPreservesElement) {
  auto G = make_group("braid:4");
  for (auto& w : ball(3, 3)) {
    Word r = handle_reduce(w, 4);
    EXPECT_EQ(artin_key(r, 4), artin_key(w, 4)) << G->alphabet().format(w);
  }
}

TEST(Orders, ConstructorExamples) {
  auto B = make_group("braid:3");
  auto deh = make_oracle(B, "dehornoy");
  auto dd = make_oracle(B, "dd");
  EXPECT_EQ(deh->sign(B->parse("s1 s2^-1")), 1);
  EXPECT_EQ(dd->sign(B->parse("s2")), -1);
  EXPECT_EQ(dd->sign(B->parse("s1 s2")), 1);
  auto bs = make_group("bs:2");
  auto sm = make_oracle(bs, "smirnov:eps=sqrt2");
  EXPECT_EQ(sm->sign(bs->parse("g")), 1);
  EXPECT_EQ(sm->sign(bs->parse("g^-1")), -1);
}

TEST(Orders, SignExamples) {
  auto F = make_group("free:2");
  EXPECT_EQ(make_oracle(F, "magnus")->sign(F->parse("f g f^-1 g^-1")), 1);
  EXPECT_EQ(make_oracle(F, "sunic")->sign(F->parse("f1")), 1);
  auto K = make_group("tararin:2");
  EXPECT_EQ(make_oracle(K, "tararin:++")->sign(K->parse("a b^-5")), 1);
}

TEST(Orders, RejectsMismatchedFamilies) {
  EXPECT_THROW(make_oracle(make_group("free:2"), "dehornoy"), ParseError);
  EXPECT_THROW(make_oracle(make_group("braid:3"), "magnus"), ParseError);
  EXPECT_THROW(make_oracle(make_group("bs:2"), "smirnov:eps=3/2"), ParseError);
  EXPECT_THROW(make_oracle(make_group("zn:2"), "z2:lambda=2"), ParseError);
  EXPECT_THROW(make_oracle(make_group("zn:2"), "nope"), ParseError);
  EXPECT_THROW(make_oracle(make_group("tararin:2"), "tararin:+"), ParseError);
}

TEST(Orders, DehornoySubwordProperty) {
  auto B = make_group("braid:3");
  auto deh = make_oracle(B, "dehornoy");
  for (auto& w : ball(2, 3))
    for (int i = 0; i < 2; ++i) {
      Word c = w * Word::gen(i) * w.inverse();
      EXPECT_EQ(deh->sign_word(c), 1) << B->alphabet().format(c);
    }
}

TEST(Orders, DDConeIsGeneratedSemigroup) {
  // membership in <s1 s2, s2^-1>+ by enumeration up to length 10 against dd signs at radius 3
  auto B = make_group("braid:3");
  auto dd = make_oracle(B, "dd");
  Word a = B->alphabet().parse("s1 s2"), b = B->alphabet().parse("s2^-1");
  std::set<std::string> pos;
  std::vector<Word> layer{a, b};
  for (int len = 1; len <= 10; ++len) {
    std::vector<Word> next;
    for (auto& w : layer) {
      if (!pos.insert(B->key(w)).second) continue;
      next.push_back(w * a);
      next.push_back(w * b);
    }
    layer = std::move(next);
  }
  for (auto& e : element_ball(*B, 3)) {
    if (e.key == B->key(B->identity())) continue;
    int s = dd->sign(e.elem);
    bool in_p = pos.count(e.key), in_n = pos.count(B->key(B->inv(e.elem)));
    EXPECT_NE(in_p, in_n) << B->show(e.elem);
    EXPECT_EQ(s > 0, in_p) << B->show(e.elem);
  }
}

TEST(Orders, FlipOfDehornoyIsDD) {
  auto B = make_group("braid:3");
  auto deh = make_oracle(B, "dehornoy");
  auto ball4 = element_ball(*B, 4);
  auto flipped = flip_oracle(deh, braid_tail_subgroup(3, 1), &ball4, "<s2>");
  auto dd = make_oracle(B, "dd");
  BallIndex I(*B, 4);
  EXPECT_EQ(ball_cone(*flipped, I), ball_cone(*dd, I));
}

TEST(Orders, DDParityMatchesNestedFlipsB4) {
  auto B = make_group("braid:4");
  auto deh = make_oracle(B, "dehornoy");
  auto ball3 = element_ball(*B, 3);
  auto once = flip_oracle(deh, braid_tail_subgroup(4, 1), &ball3, "<s2,s3>");
  auto twice = flip_oracle(once, braid_tail_subgroup(4, 2), &ball3, "<s3>");
  BallIndex I(*B, 3);
  EXPECT_EQ(ball_cone(*twice, I), ball_cone(*make_oracle(B, "dd"), I));
}

TEST(Orders, FlipRejectsNonConvex) {
  auto B = make_group("braid:3");
  auto deh = make_oracle(B, "dehornoy");
  auto ball3 = element_ball(*B, 3);
  // <s1> is not convex for the Dehornoy order: id < s2 < s1
  EXPECT_THROW(flip_oracle(deh, [&](const Elem& x) {
                 Word r = handle_reduce(std::get<Word>(x), 3);
                 for (auto& l : r)
                   if (l.gen != 0) return false;
                 return true;
               }, &ball3, "<s1>"),
               ComputeError);
}

TEST(Orders, ReverseAndConjugate) {
  auto B = make_group("braid:3");
  auto deh = make_oracle(B, "dehornoy");
  auto rev = std::make_shared<ReverseOracle>(deh);
  EXPECT_EQ(rev->sign(B->parse("s1")), -1);
  auto back = std::make_shared<ReverseOracle>(rev);
  for (auto& e : element_ball(*B, 3)) EXPECT_EQ(back->sign(e.elem), deh->sign(e.elem));
  Elem f = B->parse("s1 s2");
  ConjugateOracle c(deh, f);
  for (auto& e : element_ball(*B, 3)) EXPECT_EQ(c.sign(e.elem), deh->sign(B->mul(B->inv(f), B->mul(e.elem, f))));
}

TEST(Orders, ConjugateSmirnovScalesEpsilon) {
  auto G = make_group("bs:2");
  auto sm = make_oracle(G, "smirnov:eps=sqrt2");
  ConjugateOracle c(sm, G->parse("h"));
  auto half = make_oracle(G, "smirnov:eps=1/2*sqrt2");
  BallIndex I(*G, 3);
  EXPECT_EQ(ball_cone(c, I), ball_cone(*half, I));
}

TEST(Orders, MagnusExpansion) {
  Word f = Word::gen(0), g = Word::gen(1);
  EXPECT_EQ(magnus_expand(f, 1).str(), "1 + X");
  EXPECT_EQ(magnus_expand(f.inverse(), 3).str(), "1 - X + XX - XXX");
  EXPECT_EQ(magnus_expand(f * g, 2).str(), "1 + X + Y + XY");
  // against the naive series product
  for (auto& w : ball(2, 4))
    for (int D : {2, 4}) {
      NCPoly p = magnus_expand(w, D);
      for (auto& [m, c] : series_of(w, D)) ASSERT_EQ(coef(p, m), c) << m;
    }
  // multiplicativity
  for (auto& u : ball(2, 2))
    for (auto& v : ball(2, 2)) {
      Series prod = series_mul(series_of(u, 4), series_of(v, 4), 4);
      NCPoly p = magnus_expand(u * v, 4);
      for (auto& [m, c] : prod) ASSERT_EQ(coef(p, m), c);
    }
}

TEST(Orders, MagnusCommutatorLead) {
  Series s = series_of(Word({{0, 1}, {1, 1}, {0, -1}, {1, -1}}), 2);
  EXPECT_EQ(s["X"], 0);
  EXPECT_EQ(s["Y"], 0);
  EXPECT_EQ(s["XX"], 0);
  EXPECT_EQ(s["XY"], 1);
  auto L = magnus_lead(Word({{0, 1}, {1, 1}, {0, -1}, {1, -1}}), 2);
  EXPECT_EQ(L.degree, 2);
  EXPECT_EQ(L.monomial, (std::vector<int>{0, 1}));
}

TEST(Orders, MagnusSignStableInDegree) {
  for (auto& w : ball(2, 4)) {
    if (w.empty()) continue;
    int L = static_cast<int>(w.size());
    auto lead = magnus_lead(w, 2);
    for (int D = L; D <= L + 2; ++D) {
      NCPoly p = magnus_expand(w, D);
      int s = 0;
      for (int d = 1; d <= D && !s; ++d)
        for (auto c : p.c[d])
          if (c) {
            s = c > 0 ? 1 : -1;
            break;
          }
      EXPECT_EQ(s, lead.sign);
    }
  }
}

TEST(Orders, SunicPhi) {
  Alphabet A({"f1", "f2"});
  EXPECT_EQ(sunic_phi(Word()), 0);
  EXPECT_EQ(sunic_phi(A.parse("f2 f1^-1")), Q(1, 2));
  EXPECT_EQ(sunic_phi(A.parse("f1^-1")), Q(-1, 2));
  EXPECT_EQ(sunic_phi(A.parse("f1")), Q(1, 2));
}

TEST(Orders, Z2AndHolderFields) {
  auto Z = make_group("zn:2");
  auto o = make_oracle(Z, "z2:lambda=sqrt2");
  // (m, n) positive iff sqrt2 m + n > 0
  EXPECT_EQ(o->sign(IVec{1, -1}), 1);
  EXPECT_EQ(o->sign(IVec{-1, 1}), -1);
  EXPECT_EQ(o->sign(IVec{5, -7}), 1);
  EXPECT_EQ(o->sign(IVec{5, -8}), -1);
  auto r = make_oracle(Z, "z2rational:x=1;y=2;sub=-");
  // on the kernel line x m + y n = 0 the subsign decides along (-y, x)
  EXPECT_EQ(r->sign(IVec{2, -1}), 1);
  EXPECT_EQ(r->sign(IVec{-2, 1}), -1);
  EXPECT_EQ(r->sign(IVec{1, 0}), 1);
}

TEST(Orders, ThompsonFastLessMatchesSign) {
  auto G = make_group("thompsonF");
  auto B = element_ball(*G, 2);
  for (const char* k : {"thompson:xminus+", "thompson:xminus-", "thompson:xplus+", "thompson:xplus-"}) {
    auto o = make_oracle(G, k);
    for (auto& x : B)
      for (auto& y : B) ASSERT_EQ(o->less(x.elem, y.elem), o->sign(G->mul(G->inv(x.elem), y.elem)) > 0) << k;
  }
}

TEST(Orders, ThompsonGeneratorSigns) {
  auto G = make_group("thompsonF");
  // x0 has slope 1/2 at 0 and 2 at 1; x1 is the identity near 0
  EXPECT_EQ(make_oracle(G, "thompson:xminus+")->sign(G->gen(0)), -1);
  EXPECT_EQ(make_oracle(G, "thompson:xminus-")->sign(G->gen(0)), 1);
  EXPECT_EQ(make_oracle(G, "thompson:xplus+")->sign(G->gen(0)), -1);
  EXPECT_EQ(make_oracle(G, "thompson:xminus+")->sign(G->gen(1)), -1);
}

TEST(Orders, TorusSigns) {
  auto T = make_group("torus:3,2");
  auto o = make_oracle(T, "torus");
  EXPECT_EQ(o->sign(T->parse("a")), 1);
  EXPECT_EQ(o->sign(T->parse("b")), 1);
  EXPECT_EQ(o->sign(T->parse("a^-1")), -1);
  EXPECT_EQ(o->sign(T->parse("b a^2 b a^-1")), 0);
}

TEST(Orders, BiOrdersConjugationInvariant) {
  for (auto& o : catalog_oracles()) {
    if (!o->bi_order()) continue;
    const Group& G = o->group();
    auto B = element_ball(G, 2);
    for (auto& g : B)
      for (auto& h : B)
        ASSERT_EQ(o->sign(G.mul(h.elem, G.mul(g.elem, G.inv(h.elem)))), o->sign(g.elem)) << o->name();
  }
}

TEST(Orders, LeftInvariantCones) {
  for (auto& o : catalog_oracles()) {
    const Group& G = o->group();
    auto B = element_ball(G, 3);
    for (auto& g : B) {
      EXPECT_EQ(o->sign(g.elem) == 0, G.is_id(g.elem)) << o->name();
      EXPECT_EQ(o->sign(G.inv(g.elem)), -o->sign(g.elem)) << o->name();
    }
    auto B2 = element_ball(G, 2);
    for (auto& g : B2)
      for (auto& h : B2)
        if (o->sign(g.elem) > 0 && o->sign(h.elem) > 0) ASSERT_GT(o->sign(G.mul(g.elem, h.elem)), 0) << o->name();
  }
}

TEST(Orders, DynLexRequiresLoader) {
  dynlex_loader() = nullptr;
  EXPECT_THROW(make_oracle(make_group("bs:2"), "dynlex:file=x.json"), ParseError);
  EXPECT_THROW(make_oracle(make_group("bs:2"), "dynlex"), ParseError);
}
