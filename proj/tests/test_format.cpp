#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>

#include "fsym/format.hpp"
#include "fsym/hopf.hpp"

using fsym::LinComb;
using fsym::MonomialCoords;
using fsym::Permutation;
using fsym::StandardTableau;

TEST_CASE("permutation text round trip") {
  CHECK(fsym::to_text(Permutation({4, 5, 2, 3, 1})) == "45231");
  CHECK(fsym::to_text(Permutation()) == "e");
  CHECK(fsym::parse_permutation("45231") == Permutation({4, 5, 2, 3, 1}));
  CHECK(fsym::parse_permutation("e") == Permutation());
  const Permutation wide({4, 5, 2, 3, 1, 10, 6, 7, 8, 9});
  CHECK(fsym::to_text(wide) == "4,5,2,3,1,10,6,7,8,9");
  CHECK(fsym::parse_permutation(fsym::to_text(wide)) == wide);
  CHECK_THROWS_AS(fsym::parse_permutation("4521"), std::invalid_argument);
  CHECK_THROWS_AS(fsym::parse_permutation("12x"), std::invalid_argument);
}

TEST_CASE("tableau text round trip") {
  const StandardTableau t({{1, 3, 4, 7}, {2, 5}, {6}});
  CHECK(fsym::to_text(t) == "1347/25/6");
  CHECK(fsym::parse_tableau("1347/25/6") == t);
  CHECK(fsym::to_text(StandardTableau()) == "e");
  CHECK(fsym::parse_tableau("e") == StandardTableau());

  // wide tableaux switch to space-separated entries
  const StandardTableau wide(
      {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {11, 12}});
  CHECK(fsym::to_text(wide) == "1 2 3 4 5 6 7 8 9 10/11 12");
  CHECK(fsym::parse_tableau(fsym::to_text(wide)) == wide);

  // a tall single column never contains spaces but must still reparse
  std::vector<std::vector<int>> column_rows;
  for (int i = 1; i <= 11; ++i) column_rows.push_back({i});
  const StandardTableau column(column_rows);
  CHECK(fsym::parse_tableau(fsym::to_text(column)) == column);

  CHECK_THROWS_AS(fsym::parse_tableau("31/2"), std::invalid_argument);
  CHECK_THROWS_AS(fsym::parse_tableau("12//3"), std::invalid_argument);
  // keys always denote basis elements with entries exactly {1..n}
  CHECK_THROWS_AS(fsym::parse_tableau("23/4"), std::invalid_argument);
}

TEST_CASE("combination text round trip") {
  const auto x = fsym::parse_lincomb_perm("1*1243 + 1*1342 + 1*3421");
  CHECK(x.term_count() == 3);
  CHECK(fsym::to_text(x) == "1*1243 + 1*1342 + 1*3421");

  LinComb<Permutation> y;
  y.add(Permutation({1, 2}), -2);
  y.add(Permutation({2, 1}), 7);
  CHECK(fsym::to_text(y) == "-2*12 + 7*21");
  CHECK(fsym::parse_lincomb_perm(fsym::to_text(y)) == y);

  CHECK(fsym::to_text(LinComb<Permutation>()) == "0");
  CHECK(fsym::parse_lincomb_perm("0").is_zero());

  LinComb<StandardTableau> z;
  z.add(fsym::parse_tableau("13/2"), -1);
  z.add(fsym::parse_tableau("123"), 4);
  CHECK(fsym::parse_lincomb_tab(fsym::to_text(z)) == z);
}

TEST_CASE("tensor text round trip") {
  const auto t = coproduct(fsym::parse_permutation("3124"));
  CHECK(fsym::to_text(t) ==
        "1*(e (x) 3124) + 1*(1 (x) 213) + 1*(12 (x) 12) + 1*(312 (x) 1) + "
        "1*(3124 (x) e)");
  CHECK(fsym::parse_tensor_perm(fsym::to_text(t)) == t);
  const auto tt = coproduct(fsym::parse_tableau("13/2"));
  CHECK(fsym::parse_tensor_tab(fsym::to_text(tt)) == tt);
}

TEST_CASE("monomial coordinate text round trip") {
  MonomialCoords<StandardTableau> m;
  m.coords.add(fsym::parse_tableau("123/456"), 2);
  m.coords.add(fsym::parse_tableau("1356/24"), -1);
  const auto text = fsym::to_text(m);
  CHECK(text == "-1*M(1356/24) + 2*M(123/456)");
  CHECK(fsym::parse_monomial_tab(text) == m);
}

TEST_CASE("json round trips") {
  const Permutation p({3, 1, 2, 4});
  CHECK(fsym::permutation_from_json(fsym::to_json(p)) == p);
  const StandardTableau t({{1, 2, 4}, {3}});
  CHECK(fsym::to_json(t).dump() == "[[1,2,4],[3]]");
  CHECK(fsym::tableau_from_json(fsym::to_json(t)) == t);

  LinComb<Permutation> x;
  x.add(Permutation({2, 1}), -3);
  x.add(Permutation({1, 2}), 1);
  CHECK(fsym::lincomb_perm_from_json(fsym::to_json(x)) == x);

  LinComb<StandardTableau> y;
  y.add(t, 12);
  CHECK(fsym::lincomb_tab_from_json(fsym::to_json(y)) == y);

  const auto j = fsym::to_json(coproduct(p));
  CHECK(j.is_array());
  CHECK(j.size() == 5);
  CHECK(j[0].contains("left"));
}

TEST_CASE("grid rendering") {
  const StandardTableau t({{1, 3}, {2, 5}, {4}});
  CHECK(fsym::render_grid(t, false) == "1 3\n2 5\n4\n");
  CHECK(fsym::render_grid(t, true) == "4\n2 5\n1 3\n");
  CHECK(fsym::render_grid(StandardTableau(), false) == "e\n");
}

TEST_CASE("printed values reparse across generated data") {
  for (const auto& t : fsym::enumerate_tableaux(6)) {
    CHECK(fsym::parse_tableau(fsym::to_text(t)) == t);
    CHECK(fsym::tableau_from_json(fsym::to_json(t)) == t);
  }
  for (const auto& sigma : fsym::plactic_class(
           fsym::parse_tableau("125/346"))) {
    CHECK(fsym::parse_permutation(fsym::to_text(sigma)) == sigma);
  }
}
