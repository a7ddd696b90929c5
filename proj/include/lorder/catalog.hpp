#pragma once

#include "orders.hpp"

#include <string>
#include <vector>

namespace lorder {

struct CatalogEntry {
  std::string group, oracle;
};

// every oracle constructor on a group it accepts; dynlex is built in code below
inline const std::vector<CatalogEntry>& oracle_catalog() {
  static const std::vector<CatalogEntry> c{
      {"braid:3", "dehornoy"},          {"braid:3", "dd"},
      {"free:2", "magnus"},             {"free:2", "sunic"},
      {"free:2", "vinogradov"},         {"bs:2", "smirnov:eps=sqrt2"},
      {"bs:3", "smirnov:eps=-1+1*sqrt5"}, {"tararin:2", "tararin:++"},
      {"tararin:2", "tararin:+-"},      {"tararin:2", "tararin:-+"},
      {"tararin:2", "tararin:--"},      {"tararin:3", "tararin:+-+"},
      {"zn:1", "lex"},                  {"zn:3", "lex"},
      {"zn:2", "z2:lambda=sqrt2"},      {"zn:2", "z2rational:x=1;y=2;sub=-"},
      {"torus:3,2", "torus"},           {"thompsonF", "thompson:xminus+"},
      {"thompsonF", "thompson:xminus-"}, {"thompsonF", "thompson:xplus+"},
      {"thompsonF", "thompson:xplus-"},
  };
  return c;
}

// bs(2) acting affinely, compared at 0 then 1
inline OraclePtr bs_dynlex(GroupPtr g) {
  std::vector<PLHomeo> gens{PLHomeo::affine(Q(1), Q(1)), PLHomeo::affine(Q(2), Q(0))};
  return std::make_shared<DynLexOracle>(std::move(g), std::move(gens), std::vector<Q>{Q(0), Q(1)},
                                        std::vector<int>{1, -1});
}

inline std::vector<OraclePtr> catalog_oracles() {
  std::vector<OraclePtr> out;
  for (auto& e : oracle_catalog()) out.push_back(make_oracle(make_group(e.group), e.oracle));
  out.push_back(bs_dynlex(make_group("bs:2")));
  return out;
}

}  // namespace lorder
