#include "fsym/poset.hpp"

#include <algorithm>
#include <set>

namespace fsym {

FinitePoset<Permutation> weak_order_poset(int n) {
  std::vector<Permutation> elements;
  std::vector<int> letters(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) letters[static_cast<std::size_t>(i)] = i + 1;
  do {
    elements.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));

  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    index.emplace(elements[i], static_cast<int>(i));
  }
  std::vector<std::pair<int, int>> relations;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& cover : weak_covers(elements[i])) {
      relations.emplace_back(static_cast<int>(i), index.at(cover));
    }
  }
  return FinitePoset<Permutation>(std::move(elements), std::move(relations));
}

FinitePoset<StandardTableau> taskin_poset(int n) {
  std::vector<StandardTableau> elements = enumerate_tableaux(n);
  std::map<StandardTableau, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    index.emplace(elements[i], static_cast<int>(i));
  }
  // generating relation: images of the weak-order covers under insertion;
  // covers with plactic-equivalent endpoints are vacuous and dropped
  std::set<std::pair<int, int>> relations;
  std::vector<int> letters(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) letters[static_cast<std::size_t>(i)] = i + 1;
  do {
    const Permutation sigma{letters};
    const int a = index.at(rsk_insertion(sigma));
    for (const auto& cover : weak_covers(sigma)) {
      const int b = index.at(rsk_insertion(cover));
      if (a != b) relations.emplace(a, b);
    }
  } while (std::next_permutation(letters.begin(), letters.end()));

  return FinitePoset<StandardTableau>(
      std::move(elements),
      std::vector<std::pair<int, int>>(relations.begin(), relations.end()));
}

const FinitePoset<Permutation>& PosetBank::weak(int n) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = weak_.find(n);
  if (it == weak_.end()) {
    it = weak_.emplace(n, std::make_unique<FinitePoset<Permutation>>(
                              weak_order_poset(n)))
             .first;
  }
  return *it->second;
}

const FinitePoset<StandardTableau>& PosetBank::taskin(int n) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = taskin_.find(n);
  if (it == taskin_.end()) {
    it = taskin_.emplace(n, std::make_unique<FinitePoset<StandardTableau>>(
                                taskin_poset(n)))
             .first;
  }
  return *it->second;
}

}  // namespace fsym
