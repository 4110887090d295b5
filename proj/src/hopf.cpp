#include "fsym/hopf.hpp"

#include <algorithm>

namespace fsym {

namespace {

// All k-subsets of {0,...,n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(int n, int k, Visit&& visit) {
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    visit(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

LinComb<Permutation> hopf_product(const Permutation& alpha,
                                  const Permutation& beta) {
  const int p = alpha.size(), q = beta.size(), n = p + q;
  LinComb<Permutation> out;
  for_each_subset(n, p, [&](const std::vector<int>& pick) {
    std::vector<int> word(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int i = 0; i < p; ++i) {
      // place the chosen values in the pattern of alpha
      word[static_cast<std::size_t>(i)] =
          pick[static_cast<std::size_t>(alpha(i + 1) - 1)] + 1;
      used[static_cast<std::size_t>(word[static_cast<std::size_t>(i)])] = true;
    }
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(q));
    for (int v = 1; v <= n; ++v) {
      if (!used[static_cast<std::size_t>(v)]) rest.push_back(v);
    }
    for (int i = 0; i < q; ++i) {
      word[static_cast<std::size_t>(p + i)] =
          rest[static_cast<std::size_t>(beta(i + 1) - 1)];
    }
    out.add(Permutation(std::move(word)), 1);
  });
  return out;
}

TensorComb<Permutation> coproduct(const Permutation& sigma) {
  const int n = sigma.size();
  TensorComb<Permutation> out;
  for (int i = 0; i <= n; ++i) {
    // the low part is already a permutation of {1..i}
    Permutation left{restrict_to(sigma.word(), 1, i)};
    Permutation right = standardize(restrict_to(sigma.word(), i + 1, n));
    out.add(std::move(left), std::move(right), 1);
  }
  return out;
}

LinComb<Permutation> shifted_shuffle(const Permutation& a,
                                     const Permutation& b) {
  const int p = a.size(), q = b.size(), n = p + q;
  LinComb<Permutation> out;
  for_each_subset(n, p, [&](const std::vector<int>& positions) {
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < p; ++i) {
      word[static_cast<std::size_t>(positions[static_cast<std::size_t>(i)])] =
          a(i + 1);
    }
    int j = 0;
    for (int i = 0; i < n; ++i) {
      if (word[static_cast<std::size_t>(i)] == 0) {
        word[static_cast<std::size_t>(i)] = b(++j) + p;
      }
    }
    out.add(Permutation(std::move(word)), 1);
  });
  return out;
}

LinComb<StandardTableau> hopf_product(const StandardTableau& a,
                                      const StandardTableau& b) {
  LinComb<StandardTableau> out;
  const auto words = hopf_product(reading_word(a), reading_word(b));
  for (const auto& [sigma, c] : words.terms()) {
    out.add(rsk_insertion(sigma), c);
  }
  return out;
}

TensorComb<StandardTableau> coproduct(const StandardTableau& t) {
  const int n = t.size();
  TensorComb<StandardTableau> out;
  for (int p = 0; p <= n; ++p) {
    out.add(restrict_std(t, 1, p), restrict_std(t, p + 1, n), 1);
  }
  return out;
}

LinComb<StandardTableau> shifted_shuffle(
    const StandardTableau& a, const StandardTableau& b,
    const FinitePoset<StandardTableau>& poset) {
  const StandardTableau bottom = right_shifted_concat(a, b);
  const StandardTableau top = left_shifted_concat(b, a);
  LinComb<StandardTableau> out;
  for (const auto& t : poset.interval(bottom, top)) {
    out.add(t, 1);
  }
  return out;
}

TensorComb<Permutation> coproduct_monomial(const Permutation& sigma) {
  const auto factors = indecomposable_factors(sigma);
  const int k = static_cast<int>(factors.size());
  TensorComb<Permutation> out;
  for (int cut = 0; cut <= k; ++cut) {
    Permutation high;  // fold of the first `cut` factors
    for (int i = 0; i < cut; ++i) {
      high = left_shifted_concat(high, factors[static_cast<std::size_t>(i)]);
    }
    Permutation low;  // fold of the remaining factors
    for (int i = cut; i < k; ++i) {
      low = left_shifted_concat(low, factors[static_cast<std::size_t>(i)]);
    }
    // sigma = left_shifted_concat(high, low)
    out.add(low, high, 1);
  }
  return out;
}

TensorComb<StandardTableau> coproduct_monomial(const StandardTableau& t) {
  const int n = t.size();
  TensorComb<StandardTableau> out;
  for (int p = 0; p <= n; ++p) {
    StandardTableau low = restrict_std(t, 1, p);
    StandardTableau high = restrict_std(t, p + 1, n);
    if (left_shifted_concat(high, low) == t) {
      out.add(std::move(low), std::move(high), 1);
    }
  }
  return out;
}

namespace {

template <typename B>
bool is_primitive_impl(const LinComb<B>& x) {
  const int rank = homogeneous_rank(x);
  if (rank < 1) {
    throw std::invalid_argument("is_primitive requires rank >= 1");
  }
  TensorComb<B> expected;
  const B unit{};
  for (const auto& [b, c] : x.terms()) {
    expected.add(b, unit, c);
    expected.add(unit, b, c);
  }
  return coproduct(x) == expected;
}

}  // namespace

bool is_primitive(const LinComb<Permutation>& x) {
  return is_primitive_impl(x);
}
bool is_primitive(const LinComb<StandardTableau>& x) {
  return is_primitive_impl(x);
}

std::vector<StandardTableau> primitive_basis(int n) {
  std::vector<StandardTableau> out;
  for (const auto& t : enumerate_tableaux(n)) {
    if (is_indecomposable(t)) out.push_back(t);
  }
  return out;
}

MonomialCoords<StandardTableau> monomial_product(const StandardTableau& a,
                                                 const StandardTableau& b,
                                                 PosetBank& bank) {
  const auto xa = from_monomial(MonomialCoords<StandardTableau>::unit(a),
                                bank.taskin(a.size()));
  const auto xb = from_monomial(MonomialCoords<StandardTableau>::unit(b),
                                bank.taskin(b.size()));
  const auto product = hopf_product(xa, xb);
  if (product.is_zero()) return {};
  return to_monomial(product, bank.taskin(a.size() + b.size()));
}

}  // namespace fsym
