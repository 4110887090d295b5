#pragma once

#include <set>
#include <utility>
#include <vector>

#include "fsym/permutation.hpp"
#include "fsym/word.hpp"

namespace fsym {

/// Partition shape: weakly decreasing positive parts.
using Shape = std::vector<int>;

/// A standard Young tableau in English convention: row 1 is the longest,
/// rows increase strictly left to right, columns increase strictly from
/// row 1 downward, entries are exactly {1,...,n}. A tableau is identified
/// with its plactic class throughout.
class StandardTableau {
 public:
  StandardTableau() = default;
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return size_; }
  bool empty() const { return rows_.empty(); }
  Shape shape() const;

  friend bool operator==(const StandardTableau& a,
                         const StandardTableau& b) {
    return a.rows_ == b.rows_;
  }

  /// Canonical basis order: by rank, then by shape (single row first),
  /// then lexicographically on the row-reading word. Matches the order of
  /// enumerate_tableaux.
  friend bool operator<(const StandardTableau& a, const StandardTableau& b);

 private:
  std::vector<std::vector<int>> rows_;
  int size_ = 0;
};

/// True iff the entries are exactly {1,...,n}: the tableau names a basis
/// element rather than a partial insertion state.
bool has_standard_entries(const StandardTableau& t);

/// Schensted row insertion of a letter not already present in T.
StandardTableau row_insert(const StandardTableau& t, int x);

struct RskPair {
  StandardTableau p;  // insertion tableau
  StandardTableau q;  // recording tableau
};

/// The Schensted correspondence sigma -> (P, Q); P and Q share a shape.
RskPair rsk(const Permutation& sigma);

/// Insertion tableau alone.
StandardTableau rsk_insertion(const Permutation& sigma);

/// The unique sigma with rsk(sigma) = (p, q), by reverse bumping driven by
/// the entries n, n-1, ..., 1 of q. Requires shape(p) = shape(q).
Permutation inverse_rsk(const StandardTableau& p, const StandardTableau& q);

/// Row word read from the last row up to row 1, each row left to right.
/// Canonical plactic-class representative: rsk_insertion(reading_word(T)) = T.
Permutation reading_word(const StandardTableau& t);

/// All standard Young tableaux with entries {1,...,n}, in the canonical
/// order (by shape, single row first, then lexicographic reading word).
std::vector<StandardTableau> enumerate_tableaux(int n);

/// All standard Young tableaux of the given shape, canonical order.
std::vector<StandardTableau> tableaux_of_shape(const Shape& shape);

/// All permutations sigma with insertion tableau T, sorted.
std::vector<Permutation> plactic_class(const StandardTableau& t);

/// Words reachable from w by one elementary Knuth move, either relation
/// type and either direction, at any position.
std::vector<Word> knuth_neighbors(const Word& w);

/// Tableau product induced by left_shifted_concat on any representatives.
StandardTableau left_shifted_concat(const StandardTableau& v,
                                    const StandardTableau& u);

/// Tableau product induced by right_shifted_concat on any representatives.
StandardTableau right_shifted_concat(const StandardTableau& a,
                                     const StandardTableau& b);

/// st(T|I) for an interval I = [lo, hi]: insertion tableau of the
/// standardized restriction of any representative.
StandardTableau restrict_std(const StandardTableau& t, int lo, int hi);

/// Set overload; the set must be an interval (restriction to arbitrary sets
/// is not compatible with the plactic equivalence).
StandardTableau restrict_std(const StandardTableau& t,
                             const std::set<int>& values);

/// True iff T admits no split T = left_shifted_concat(V, U) with U, V
/// nonempty. The empty tableau is the unit and is rejected.
bool is_indecomposable(const StandardTableau& t);

/// Factorization of T into indecomposable factors for left_shifted_concat,
/// listed so that folding them left to right reconstitutes T.
std::vector<StandardTableau> indecomposable_factors(const StandardTableau& t);

/// Number of indecomposable tableaux with n entries.
long long count_indecomposable(int n);

}  // namespace fsym
