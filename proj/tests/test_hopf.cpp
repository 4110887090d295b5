#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fsym/format.hpp"
#include "fsym/hopf.hpp"

using fsym::Int;
using fsym::LinComb;
using fsym::MonomialCoords;
using fsym::Permutation;
using fsym::PosetBank;
using fsym::StandardTableau;
using fsym::TensorComb;

namespace {

Permutation perm(const std::string& text) {
  return fsym::parse_permutation(text);
}
StandardTableau tab(const std::string& text) {
  return fsym::parse_tableau(text);
}

LinComb<Permutation> comb(const std::string& text) {
  return fsym::parse_lincomb_perm(text);
}

}  // namespace

TEST_CASE("destandardized concatenation") {
  CHECK(hopf_product(perm("12"), perm("21")) ==
        comb("1*1243 + 1*1342 + 1*1432 + 1*2341 + 1*2431 + 1*3421"));
  CHECK(hopf_product(Permutation(), perm("231")) == comb("1*231"));
  CHECK(hopf_product(perm("231"), Permutation()) == comb("1*231"));
  // binomial term count with all coefficients one
  const auto x = hopf_product(perm("213"), perm("12"));
  CHECK(x.term_count() == 10);
  for (const auto& [key, c] : x.terms()) CHECK(c == 1);
}

TEST_CASE("standardized unshuffling") {
  CHECK(coproduct(perm("3124")) ==
        fsym::parse_tensor_perm("1*(e (x) 3124) + 1*(1 (x) 213) + "
                                "1*(12 (x) 12) + 1*(312 (x) 1) + "
                                "1*(3124 (x) e)"));
  CHECK(coproduct(Permutation()) == TensorComb<Permutation>::unit(
                                        Permutation(), Permutation()));
  for (int n = 0; n <= 5; ++n) {
    const auto sigma = Permutation::identity(n);
    CHECK(coproduct(sigma).term_count() == static_cast<std::size_t>(n) + 1);
  }
}

TEST_CASE("shifted shuffle of permutations") {
  CHECK(shifted_shuffle(perm("1"), perm("1")) == comb("1*12 + 1*21"));
  CHECK(shifted_shuffle(perm("312"), Permutation()) == comb("1*312"));
  const auto x = shifted_shuffle(perm("12"), perm("21"));
  CHECK(x.term_count() == 6);
  for (const auto& [key, c] : x.terms()) CHECK(c == 1);
}

TEST_CASE("tableau product collects insertion images") {
  const auto x = hopf_product(tab("12"), tab("1/2"));
  LinComb<StandardTableau> expected;
  for (const char* text :
       {"123/4", "124/3", "12/3/4", "134/2", "13/2/4", "14/2/3"}) {
    expected.add(tab(text), 1);
  }
  CHECK(x == expected);
  CHECK(hopf_product(StandardTableau(), tab("12")) ==
        LinComb<StandardTableau>::unit(tab("12")));
  Int mass = 0;
  for (const auto& [key, c] : x.terms()) mass += c;
  CHECK(mass == 6);
}

TEST_CASE("tableau coproduct agrees with the projected one") {
  const auto t = tab("124/3");  // insertion tableau of 3124
  const auto direct = coproduct(t);
  TensorComb<StandardTableau> projected;
  for (const auto& [key, c] : coproduct(perm("3124")).terms()) {
    projected.add(fsym::rsk_insertion(key.first),
                  fsym::rsk_insertion(key.second), c);
  }
  CHECK(direct == projected);
  CHECK(coproduct(StandardTableau()) ==
        TensorComb<StandardTableau>::unit(StandardTableau(),
                                          StandardTableau()));
  CHECK(direct.term_count() == 5);
}

TEST_CASE("tableau shuffle over the rank-two interval") {
  PosetBank bank;
  const auto x = shifted_shuffle(tab("1"), tab("1"), bank.taskin(2));
  LinComb<StandardTableau> expected;
  expected.add(tab("12"), 1);
  expected.add(tab("1/2"), 1);
  CHECK(x == expected);
  CHECK(shifted_shuffle(StandardTableau(), tab("1/2"), bank.taskin(2)) ==
        LinComb<StandardTableau>::unit(tab("1/2")));
}

TEST_CASE("monomial basis change") {
  PosetBank bank;
  const auto& poset = bank.weak(3);
  // the maximum element is its own monomial expansion
  CHECK(from_monomial(MonomialCoords<Permutation>::unit(perm("321")), poset) ==
        comb("1*321"));
  // a basis element has coefficient one on its whole upset
  const auto coords = to_monomial(comb("1*213"), poset);
  LinComb<Permutation> expected;
  for (const char* text : {"213", "231", "321"}) expected.add(perm(text), 1);
  CHECK(coords.coords == expected);
  // round trip on a random homogeneous combination
  std::mt19937 rng(99u);
  std::uniform_int_distribution<int> dist(-4, 4);
  LinComb<Permutation> x;
  for (const auto& sigma : poset.elements()) x.add(sigma, dist(rng));
  CHECK(from_monomial(to_monomial(x, poset), poset) == x);
  CHECK_THROWS_AS(to_monomial(comb("1*1 + 1*12"), poset),
                  std::invalid_argument);
}

TEST_CASE("monomial coproduct of permutations") {
  const auto tm = coproduct_monomial(perm("78465213"));
  TensorComb<Permutation> expected;
  expected.add(perm("78465213"), Permutation(), 1);
  expected.add(perm("465213"), perm("12"), 1);
  expected.add(perm("213"), perm("45132"), 1);
  expected.add(Permutation(), perm("78465213"), 1);
  CHECK(tm == expected);
  // an indecomposable element is primitive in the monomial basis
  CHECK(coproduct_monomial(perm("2413")).term_count() == 2);
}

TEST_CASE("monomial coproduct of tableaux") {
  // single rows are indecomposable, so the glued tableau splits once
  const StandardTableau u = tab("123");
  const StandardTableau v = tab("12");
  const auto glued = left_shifted_concat(v, u);
  REQUIRE(fsym::is_indecomposable(u));
  REQUIRE(fsym::is_indecomposable(v));
  const auto tm = coproduct_monomial(glued);
  CHECK(tm.coefficient(u, v) == 1);
  CHECK(tm.coefficient(glued, StandardTableau()) == 1);
  CHECK(tm.coefficient(StandardTableau(), glued) == 1);
  CHECK(tm.term_count() == 3);
  // a tableau with a decomposable factor splits more often
  CHECK(coproduct_monomial(left_shifted_concat(tab("12"), tab("13/2")))
            .term_count() == 4);
  // single cells are indecomposable
  CHECK(coproduct_monomial(tab("1")).term_count() == 2);
}

TEST_CASE("theorem pipelines agree at small rank") {
  PosetBank bank;
  for (int n = 0; n <= 4; ++n) {
    for (const auto& t : fsym::enumerate_tableaux(n)) {
      const auto direct = coproduct_monomial(t);
      const auto expanded = from_monomial(
          MonomialCoords<StandardTableau>::unit(t), bank.taskin(n));
      const auto oracle = tensor_to_monomial(coproduct(expanded), bank);
      CHECK(direct == oracle);
    }
  }
}

TEST_CASE("primitivity") {
  PosetBank bank;
  for (const auto& t : fsym::enumerate_tableaux(4)) {
    const auto element =
        from_monomial(MonomialCoords<StandardTableau>::unit(t), bank.taskin(4));
    CHECK(is_primitive(element) == fsym::is_indecomposable(t));
  }
  CHECK(is_primitive(LinComb<StandardTableau>::unit(tab("1"))));
  LinComb<Permutation> mixed;
  mixed.add(perm("1"), 1);
  mixed.add(perm("12"), 1);
  CHECK_THROWS_AS(is_primitive(mixed), std::invalid_argument);
  CHECK_THROWS_AS(is_primitive(LinComb<Permutation>()),
                  std::invalid_argument);
}

TEST_CASE("primitive basis sizes") {
  CHECK(fsym::primitive_basis(1).size() == 1);
  CHECK(fsym::primitive_basis(4).size() == 3);
  for (const auto& t : fsym::primitive_basis(5)) {
    CHECK(fsym::is_indecomposable(t));
  }
}

TEST_CASE("monomial product unit law") {
  PosetBank bank;
  for (const auto& t : fsym::enumerate_tableaux(3)) {
    const auto x = monomial_product(StandardTableau(), t, bank);
    CHECK(x == MonomialCoords<StandardTableau>::unit(t));
    const auto y = monomial_product(t, StandardTableau(), bank);
    CHECK(y == MonomialCoords<StandardTableau>::unit(t));
  }
}

TEST_CASE("monomial product converts back consistently") {
  PosetBank bank;
  const auto a = tab("12");
  const auto b = tab("1/2");
  const auto coords = monomial_product(a, b, bank);
  const auto direct = hopf_product(
      from_monomial(MonomialCoords<StandardTableau>::unit(a), bank.taskin(2)),
      from_monomial(MonomialCoords<StandardTableau>::unit(b), bank.taskin(2)));
  CHECK(from_monomial(coords, bank.taskin(4)) == direct);
}

TEST_CASE("bialgebra compatibility smoke test") {
  for (const char* pa : {"1", "12", "21"}) {
    for (const char* pb : {"1", "21"}) {
      const auto alpha = perm(pa);
      const auto beta = perm(pb);
      CHECK(coproduct(hopf_product(alpha, beta)) ==
            hopf_product(coproduct(alpha), coproduct(beta)));
    }
  }
}
