#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

namespace fsym {

/// A finite word on the alphabet of positive integers. Immutable after
/// construction; all operations below return fresh values.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Word& a, const Word& b) = default;
  friend auto operator<=>(const Word& a, const Word& b) = default;

 private:
  std::vector<int> letters_;
};

/// An inversion by values: a pair (j, i) with j > i such that j appears to
/// the left of i in the word.
using Inversion = std::pair<int, int>;

/// Subword of the letters of `w` lying in `values`, order preserved.
Word restrict_to(const Word& w, const std::set<int>& values);

/// Subword of the letters of `w` lying in the interval [lo, hi]
/// (empty when lo > hi).
Word restrict_to(const Word& w, int lo, int hi);

/// All inversions of `w`, sorted. Defined for any word, duplicates included.
std::vector<Inversion> inversions(const Word& w);

/// Letters in reverse order.
Word reversed(const Word& w);

bool has_duplicates(const Word& w);

}  // namespace fsym
