#pragma once

#include <vector>

#include "fsym/word.hpp"

namespace fsym {

/// A permutation of {1,...,n} in one-line notation: the word
/// sigma(1) sigma(2) ... sigma(n). n = 0 gives the empty permutation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(Word w);
  explicit Permutation(std::vector<int> letters);

  static Permutation identity(int n);

  const Word& word() const { return word_; }
  const std::vector<int>& letters() const { return word_.letters(); }
  int size() const { return word_.size(); }
  bool empty() const { return word_.empty(); }

  /// Image of the 1-based position i.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

  auto begin() const { return word_.begin(); }
  auto end() const { return word_.end(); }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;

  /// Canonical basis order: by rank, then lexicographically on the word.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.word() < b.word();
  }

 private:
  Word word_;
};

/// Standard permutation of a duplicate-free word: each letter replaced by its
/// rank under the unique increasing bijection onto {1,...,|w|}.
Permutation standardize(const Word& w);

/// Right weak order: u <= v iff Inv(u) is contained in Inv(v).
/// Requires |u| = |v|.
bool weak_leq(const Permutation& u, const Permutation& v);

/// Upper covers of u in the right weak order: swap the entries at adjacent
/// positions i, i+1 whenever u(i) < u(i+1).
std::vector<Permutation> weak_covers(const Permutation& u);

/// u followed by v with every letter of v shifted up by |u|.
Permutation right_shifted_concat(const Permutation& u, const Permutation& v);

/// v shifted up by |u|, followed by u.
Permutation left_shifted_concat(const Permutation& v, const Permutation& u);

Permutation reversed(const Permutation& p);

/// Positions i in {1,...,n-1} with sigma(j) > sigma(k) for all j <= i < k.
std::vector<int> global_descents(const Permutation& p);

/// True iff p has no global descents. The empty permutation is the monoid
/// unit and is rejected.
bool is_indecomposable(const Permutation& p);

/// The unique factorization of p into indecomposable factors for the
/// left shifted concatenation, listed so that left_shifted_concat-folding
/// them left to right reconstitutes p (the last factor occupies the
/// rightmost, lowest-valued block of the word).
std::vector<Permutation> indecomposable_factors(const Permutation& p);

}  // namespace fsym
