#include "fsym/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fsym {

namespace {

void check_is_permutation(const Word& w) {
  const int n = w.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : w) {
    if (x > n || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("not a permutation of {1..n}");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

}  // namespace

Permutation::Permutation(Word w) : word_(std::move(w)) {
  check_is_permutation(word_);
}

Permutation::Permutation(std::vector<int> letters)
    : Permutation(Word(std::move(letters))) {}

Permutation Permutation::identity(int n) {
  std::vector<int> a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), 1);
  return Permutation(std::move(a));
}

Permutation standardize(const Word& w) {
  if (has_duplicates(w)) {
    throw std::invalid_argument("standardize requires distinct letters");
  }
  std::vector<int> sorted = w.letters();
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  out.reserve(sorted.size());
  for (int x : w) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    out.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return Permutation(std::move(out));
}

bool weak_leq(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("weak_leq compares permutations of equal rank");
  }
  const auto iu = inversions(u.word());
  const auto iv = inversions(v.word());
  return std::includes(iv.begin(), iv.end(), iu.begin(), iu.end());
}

std::vector<Permutation> weak_covers(const Permutation& u) {
  std::vector<Permutation> covers;
  const auto& a = u.letters();
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (a[i] < a[i + 1]) {
      std::vector<int> b = a;
      std::swap(b[i], b[i + 1]);
      covers.emplace_back(std::move(b));
    }
  }
  return covers;
}

Permutation right_shifted_concat(const Permutation& u, const Permutation& v) {
  std::vector<int> out = u.letters();
  out.reserve(out.size() + v.letters().size());
  for (int x : v) out.push_back(x + u.size());
  return Permutation(std::move(out));
}

Permutation left_shifted_concat(const Permutation& v, const Permutation& u) {
  std::vector<int> out;
  out.reserve(v.letters().size() + u.letters().size());
  for (int x : v) out.push_back(x + u.size());
  for (int x : u) out.push_back(x);
  return Permutation(std::move(out));
}

Permutation reversed(const Permutation& p) {
  return Permutation(reversed(p.word()));
}

std::vector<int> global_descents(const Permutation& p) {
  const auto& a = p.letters();
  const int n = p.size();
  std::vector<int> out;
  // min over prefix must exceed max over suffix
  int prefix_min = n + 1;
  std::vector<int> suffix_max(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    suffix_max[static_cast<std::size_t>(i)] =
        std::max(suffix_max[static_cast<std::size_t>(i) + 1],
                 a[static_cast<std::size_t>(i)]);
  }
  for (int i = 1; i <= n - 1; ++i) {
    prefix_min = std::min(prefix_min, a[static_cast<std::size_t>(i) - 1]);
    if (prefix_min > suffix_max[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

bool is_indecomposable(const Permutation& p) {
  if (p.empty()) {
    throw std::invalid_argument(
        "the empty permutation is the unit, neither decomposable nor "
        "indecomposable");
  }
  return global_descents(p).empty();
}

std::vector<Permutation> indecomposable_factors(const Permutation& p) {
  std::vector<Permutation> factors;
  if (p.empty()) return factors;
  const auto& a = p.letters();
  std::vector<int> cuts = global_descents(p);
  cuts.push_back(p.size());
  int start = 0;
  for (int cut : cuts) {
    std::vector<int> block(a.begin() + start, a.begin() + cut);
    factors.push_back(standardize(Word(std::move(block))));
    start = cut;
  }
  return factors;
}

}  // namespace fsym
