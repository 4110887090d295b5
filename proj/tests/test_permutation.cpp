#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "fsym/permutation.hpp"

using fsym::Permutation;
using fsym::Word;

namespace {

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> letters(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) letters[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

}  // namespace

TEST_CASE("permutation construction validates the letter set") {
  CHECK_NOTHROW(Permutation({3, 1, 2}));
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK(Permutation().empty());
  CHECK(Permutation::identity(4) == Permutation({1, 2, 3, 4}));
}

TEST_CASE("standardization") {
  CHECK(standardize(Word({5, 7, 1, 3})) == Permutation({3, 4, 1, 2}));
  CHECK(standardize(Word({1, 2, 3})) == Permutation({1, 2, 3}));
  CHECK(standardize(Word({2, 6, 3})) == Permutation({1, 3, 2}));
  CHECK(standardize(Word()) == Permutation());
  CHECK_THROWS_AS(standardize(Word({2, 2})), std::invalid_argument);
}

TEST_CASE("standardize fixes permutations") {
  for (const auto& sigma : symmetric_group(5)) {
    CHECK(standardize(sigma.word()) == sigma);
  }
}

TEST_CASE("weak order comparison") {
  CHECK(weak_leq(Permutation({1, 2, 3}), Permutation({3, 2, 1})));
  CHECK_FALSE(weak_leq(Permutation({2, 3, 1}), Permutation({2, 1, 3})));
  const Permutation u({2, 1, 3});
  CHECK(weak_leq(u, u));
  CHECK_THROWS_AS(weak_leq(Permutation({1}), Permutation({1, 2})),
                  std::invalid_argument);
}

TEST_CASE("weak covers swap adjacent ascents") {
  CHECK(weak_covers(Permutation({1, 2})) ==
        std::vector<Permutation>{Permutation({2, 1})});
  CHECK(weak_covers(Permutation({4, 3, 2, 1})).empty());
  CHECK(weak_covers(Permutation({2, 1, 3})) ==
        std::vector<Permutation>{Permutation({2, 3, 1})});
  CHECK(weak_covers(Permutation()).empty());
}

TEST_CASE("covers raise the inversion count by one") {
  for (const auto& u : symmetric_group(4)) {
    const auto iu = inversions(u.word());
    for (const auto& v : weak_covers(u)) {
      const auto iv = inversions(v.word());
      CHECK(iv.size() == iu.size() + 1);
      CHECK(weak_leq(u, v));
    }
  }
}

TEST_CASE("shifted concatenations") {
  CHECK(right_shifted_concat(Permutation({2, 3, 1}), Permutation({1, 2})) ==
        Permutation({2, 3, 1, 4, 5}));
  CHECK(right_shifted_concat(Permutation(), Permutation({2, 1})) ==
        Permutation({2, 1}));
  CHECK(right_shifted_concat(Permutation({1, 2}), Permutation({2, 1})) ==
        Permutation({1, 2, 4, 3}));
  CHECK(left_shifted_concat(Permutation({1, 2}), Permutation({2, 3, 1})) ==
        Permutation({4, 5, 2, 3, 1}));
  CHECK(left_shifted_concat(Permutation({2, 1}), Permutation()) ==
        Permutation({2, 1}));
  CHECK(left_shifted_concat(Permutation({1, 3, 2}), Permutation({2, 1, 3})) ==
        Permutation({4, 6, 5, 2, 1, 3}));
}

TEST_CASE("the two products are conjugate under reversal") {
  std::mt19937 rng(20260809u);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> size_dist(0, 8);
    auto random_perm = [&](int n) {
      std::vector<int> a(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = i + 1;
      std::shuffle(a.begin(), a.end(), rng);
      return Permutation(std::move(a));
    };
    const auto u = random_perm(size_dist(rng));
    const auto v = random_perm(size_dist(rng));
    CHECK(left_shifted_concat(v, u) ==
          reversed(right_shifted_concat(reversed(u), reversed(v))));
  }
}

TEST_CASE("global descents") {
  CHECK(global_descents(Permutation({7, 8, 4, 6, 5, 2, 1, 3})) ==
        std::vector<int>{2, 5});
  CHECK(global_descents(Permutation({1, 2, 3, 4})).empty());
  CHECK(global_descents(Permutation({3, 2, 1})) == std::vector<int>{1, 2});
  CHECK(global_descents(Permutation()).empty());
}

TEST_CASE("indecomposability") {
  CHECK(is_indecomposable(Permutation({1, 2})));
  CHECK_FALSE(is_indecomposable(Permutation({2, 1})));
  CHECK(is_indecomposable(Permutation({1})));
  CHECK_THROWS_AS(is_indecomposable(Permutation()), std::invalid_argument);
}

TEST_CASE("factorization into indecomposables") {
  CHECK(indecomposable_factors(Permutation({7, 8, 4, 6, 5, 2, 1, 3})) ==
        std::vector<Permutation>{Permutation({1, 2}), Permutation({1, 3, 2}),
                                 Permutation({2, 1, 3})});
  CHECK(indecomposable_factors(Permutation({3, 2, 1})) ==
        std::vector<Permutation>{Permutation({1}), Permutation({1}),
                                 Permutation({1})});
  CHECK(indecomposable_factors(Permutation({1, 3, 2})) ==
        std::vector<Permutation>{Permutation({1, 3, 2})});
  CHECK(indecomposable_factors(Permutation()).empty());
}

TEST_CASE("factorization reconstitutes the permutation") {
  for (const auto& sigma : symmetric_group(6)) {
    Permutation acc;
    for (const auto& f : indecomposable_factors(sigma)) {
      acc = left_shifted_concat(acc, f);
      CHECK(is_indecomposable(f));
    }
    CHECK(acc == sigma);
  }
}
