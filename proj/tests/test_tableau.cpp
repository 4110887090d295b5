#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "fsym/tableau.hpp"

using fsym::Permutation;
using fsym::Shape;
using fsym::StandardTableau;
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

// hook length formula, exact in 64-bit at these sizes
long long hook_count(const Shape& shape) {
  int n = 0;
  for (int part : shape) n += part;
  long long numerator = 1;
  for (int i = 2; i <= n; ++i) numerator *= i;
  long long hooks = 1;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    for (int c = 0; c < shape[r]; ++c) {
      int arm = shape[r] - c - 1;
      int leg = 0;
      for (std::size_t r2 = r + 1; r2 < shape.size(); ++r2) {
        if (shape[r2] > c) ++leg;
      }
      hooks *= arm + leg + 1;
    }
  }
  return numerator / hooks;
}

}  // namespace

TEST_CASE("tableau construction validates standardness") {
  CHECK_NOTHROW(StandardTableau({{1, 3}, {2}}));
  CHECK_THROWS_AS(StandardTableau({{3, 1}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(StandardTableau({{1}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(StandardTableau({{1, 2}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(StandardTableau({{1, 2}, {}}), std::invalid_argument);
  CHECK(StandardTableau().empty());
  CHECK(StandardTableau({{1, 3}, {2}}).shape() == Shape{2, 1});
  // partial insertion states carry arbitrary distinct entries
  CHECK_NOTHROW(StandardTableau({{2, 3}, {4}}));
  CHECK(fsym::has_standard_entries(StandardTableau({{1, 3}, {2}})));
  CHECK_FALSE(fsym::has_standard_entries(StandardTableau({{2, 3}, {4}})));
  CHECK(fsym::has_standard_entries(StandardTableau()));
}

TEST_CASE("row insertion bumps the smallest larger entry") {
  CHECK(row_insert(StandardTableau({{1, 3}, {2}}), 4) ==
        StandardTableau({{1, 3, 4}, {2}}));
  CHECK(row_insert(StandardTableau(), 5) == StandardTableau(std::vector<std::vector<int>>{{5}}));
  StandardTableau t;
  for (int x : {3, 1, 2, 4}) t = row_insert(t, x);
  CHECK(t == StandardTableau({{1, 2, 4}, {3}}));
  CHECK_THROWS_AS(row_insert(StandardTableau({{1, 3}, {2}}), 3),
                  std::invalid_argument);
}

TEST_CASE("insertion tableaux of the figure permutations") {
  CHECK(fsym::rsk_insertion(Permutation({2, 1, 3})) ==
        StandardTableau({{1, 3}, {2}}));
  CHECK(fsym::rsk_insertion(Permutation({4, 5, 2, 3, 1})) ==
        StandardTableau({{1, 3}, {2, 5}, {4}}));
  const auto [p, q] = fsym::rsk(Permutation({1, 2, 3, 4}));
  CHECK(p == StandardTableau({{1, 2, 3, 4}}));
  CHECK(q == StandardTableau({{1, 2, 3, 4}}));
}

TEST_CASE("inverse insertion round-trips") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& sigma : symmetric_group(n)) {
      const auto [p, q] = fsym::rsk(sigma);
      CHECK(p.shape() == q.shape());
      CHECK(fsym::inverse_rsk(p, q) == sigma);
    }
  }
  const StandardTableau row({{1, 2, 3, 4}});
  CHECK(fsym::inverse_rsk(row, row) == Permutation({1, 2, 3, 4}));
  const StandardTableau column({{1}, {2}, {3}, {4}});
  CHECK(fsym::inverse_rsk(column, column) == Permutation({4, 3, 2, 1}));
  CHECK_THROWS_AS(fsym::inverse_rsk(row, column), std::invalid_argument);
}

TEST_CASE("reading words") {
  CHECK(reading_word(StandardTableau({{1, 3}, {2}})) == Permutation({2, 1, 3}));
  CHECK(reading_word(StandardTableau({{1, 2, 3}})) == Permutation({1, 2, 3}));
  CHECK(reading_word(StandardTableau({{1, 4}, {2}, {3}})) ==
        Permutation({3, 2, 1, 4}));
  for (const auto& t : fsym::enumerate_tableaux(5)) {
    CHECK(fsym::rsk_insertion(reading_word(t)) == t);
  }
}

TEST_CASE("enumeration counts match the involution numbers") {
  // t(n) = t(n-1) + (n-1) t(n-2)
  std::vector<long long> involutions = {1, 1};
  for (int n = 2; n <= 10; ++n) {
    involutions.push_back(involutions[static_cast<std::size_t>(n) - 1] +
                          (n - 1) *
                              involutions[static_cast<std::size_t>(n) - 2]);
  }
  CHECK(involutions.back() == 9496);
  for (int n = 0; n <= 10; ++n) {
    const auto tabs = fsym::enumerate_tableaux(n);
    CHECK(static_cast<long long>(tabs.size()) ==
          involutions[static_cast<std::size_t>(n)]);
    CHECK(std::is_sorted(tabs.begin(), tabs.end()));
  }
  CHECK(fsym::enumerate_tableaux(0) ==
        std::vector<StandardTableau>{StandardTableau()});
}

TEST_CASE("per-shape enumeration matches the hook length formula") {
  for (int n = 0; n <= 7; ++n) {
    std::map<Shape, long long> by_shape;
    for (const auto& t : fsym::enumerate_tableaux(n)) ++by_shape[t.shape()];
    for (const auto& [shape, count] : by_shape) {
      CHECK(count == hook_count(shape));
      CHECK(static_cast<long long>(fsym::tableaux_of_shape(shape).size()) ==
            count);
    }
  }
}

TEST_CASE("plactic classes") {
  CHECK(fsym::plactic_class(StandardTableau({{1, 2, 3}})) ==
        std::vector<Permutation>{Permutation({1, 2, 3})});
  CHECK(fsym::plactic_class(StandardTableau({{1, 3}, {2}})) ==
        std::vector<Permutation>{Permutation({2, 1, 3}),
                                 Permutation({2, 3, 1})});
  for (int n = 0; n <= 5; ++n) {
    long long total = 0;
    for (const auto& t : fsym::enumerate_tableaux(n)) {
      total += static_cast<long long>(fsym::plactic_class(t).size());
    }
    long long factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    CHECK(total == factorial);
  }
}

TEST_CASE("elementary Knuth moves") {
  CHECK(fsym::knuth_neighbors(Word({2, 1, 3})) ==
        std::vector<Word>{Word({2, 3, 1})});
  CHECK(fsym::knuth_neighbors(Word({1, 2, 3, 4})).empty());
  // both relation types can reach the same word; it is reported once
  CHECK(fsym::knuth_neighbors(Word({2, 1, 4, 3})) ==
        std::vector<Word>{Word({2, 4, 1, 3})});
  // moves stay in the fiber
  for (const auto& sigma : symmetric_group(5)) {
    const auto t = fsym::rsk_insertion(sigma);
    for (const auto& w : fsym::knuth_neighbors(sigma.word())) {
      CHECK(fsym::rsk_insertion(standardize(w)) == t);
    }
  }
}

TEST_CASE("tableau products match the figures") {
  const StandardTableau u({{1, 3}, {2}});
  const StandardTableau v({{1, 2}});
  CHECK(left_shifted_concat(v, u) == StandardTableau({{1, 3}, {2, 5}, {4}}));
  const StandardTableau a({{1, 3}, {2}});
  const StandardTableau b({{1, 4}, {2}, {3}});
  CHECK(right_shifted_concat(a, b) ==
        StandardTableau({{1, 3, 4, 7}, {2, 5}, {6}}));
  const StandardTableau empty;
  CHECK(left_shifted_concat(empty, u) == u);
  CHECK(left_shifted_concat(u, empty) == u);
  CHECK(right_shifted_concat(empty, b) == b);
  CHECK(right_shifted_concat(b, empty) == b);
}

TEST_CASE("restriction-standardization") {
  const auto t = fsym::rsk_insertion(Permutation({3, 1, 2, 4}));
  CHECK(fsym::restrict_std(t, 1, 4) == t);
  CHECK(fsym::restrict_std(t, 1, 0) == StandardTableau());
  CHECK(fsym::restrict_std(t, 2, 4) == StandardTableau({{1, 3}, {2}}));
  CHECK(fsym::restrict_std(t, std::set<int>{2, 3, 4}) ==
        StandardTableau({{1, 3}, {2}}));
  CHECK_THROWS_AS(fsym::restrict_std(t, std::set<int>{1, 3}),
                  std::invalid_argument);
}

TEST_CASE("tableau indecomposability") {
  CHECK(fsym::is_indecomposable(StandardTableau(std::vector<std::vector<int>>{{1}})));
  const StandardTableau u({{1, 3}, {2}});
  const StandardTableau v({{1, 2}});
  CHECK_FALSE(fsym::is_indecomposable(left_shifted_concat(v, u)));
  CHECK_THROWS_AS(fsym::is_indecomposable(StandardTableau()),
                  std::invalid_argument);
}

TEST_CASE("tableau factorization reconstitutes") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : fsym::enumerate_tableaux(n)) {
      StandardTableau acc;
      for (const auto& f : fsym::indecomposable_factors(t)) {
        CHECK(fsym::is_indecomposable(f));
        acc = left_shifted_concat(acc, f);
      }
      CHECK(acc == t);
    }
  }
}

TEST_CASE("indecomposable counts") {
  const long long expected[] = {0, 1, 1, 1, 3, 7, 23};
  for (int n = 1; n <= 6; ++n) {
    CHECK(fsym::count_indecomposable(n) == expected[n]);
  }
}
