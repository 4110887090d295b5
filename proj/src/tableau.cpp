#include "fsym/tableau.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fsym {

namespace {

// Standard shape with strictly increasing rows and columns and distinct
// positive entries. Basis elements additionally carry entries exactly
// {1..n}; row insertion runs through partial states that do not.
void check_standard(const std::vector<std::vector<int>>& rows) {
  std::set<int> seen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) {
      throw std::invalid_argument("tableau row may not be empty");
    }
    if (r > 0 && rows[r].size() > rows[r - 1].size()) {
      throw std::invalid_argument("tableau row lengths must weakly decrease");
    }
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] < 1) {
        throw std::invalid_argument("tableau entries must be positive");
      }
      if (c > 0 && rows[r][c] <= rows[r][c - 1]) {
        throw std::invalid_argument("tableau rows must strictly increase");
      }
      if (r > 0 && rows[r][c] <= rows[r - 1][c]) {
        throw std::invalid_argument("tableau columns must strictly increase");
      }
      if (!seen.insert(rows[r][c]).second) {
        throw std::invalid_argument("tableau entries must be distinct");
      }
    }
  }
}

std::vector<int> reading_letters(const StandardTableau& t) {
  std::vector<int> out;
  const auto& rows = t.rows();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    out.insert(out.end(), it->begin(), it->end());
  }
  return out;
}

// Shapes compare with the single row first: lexicographically, larger
// first part wins.
bool shape_before(const Shape& a, const Shape& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  check_standard(rows_);
  for (const auto& row : rows_) size_ += static_cast<int>(row.size());
}

Shape StandardTableau::shape() const {
  Shape s;
  s.reserve(rows_.size());
  for (const auto& row : rows_) s.push_back(static_cast<int>(row.size()));
  return s;
}

bool operator<(const StandardTableau& a, const StandardTableau& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const Shape sa = a.shape(), sb = b.shape();
  if (sa != sb) return shape_before(sa, sb);
  return reading_letters(a) < reading_letters(b);
}

bool has_standard_entries(const StandardTableau& t) {
  // entries are distinct and positive, so exactness reduces to the maximum
  int max_entry = 0;
  for (const auto& row : t.rows()) max_entry = std::max(max_entry, row.back());
  return max_entry == t.size();
}

StandardTableau row_insert(const StandardTableau& t, int x) {
  std::vector<std::vector<int>> rows = t.rows();
  for (const auto& row : rows) {
    if (std::binary_search(row.begin(), row.end(), x)) {
      throw std::invalid_argument("row_insert: entry " + std::to_string(x) +
                                  " already present");
    }
  }
  int carry = x;
  for (auto& row : rows) {
    auto it = std::upper_bound(row.begin(), row.end(), carry);
    if (it == row.end()) {
      row.push_back(carry);
      return StandardTableau(std::move(rows));
    }
    std::swap(carry, *it);
  }
  rows.push_back({carry});
  return StandardTableau(std::move(rows));
}

RskPair rsk(const Permutation& sigma) {
  std::vector<std::vector<int>> p, q;
  int step = 0;
  for (int x : sigma.word()) {
    ++step;
    int carry = x;
    bool placed = false;
    for (std::size_t r = 0; r < p.size(); ++r) {
      auto it = std::upper_bound(p[r].begin(), p[r].end(), carry);
      if (it == p[r].end()) {
        p[r].push_back(carry);
        q[r].push_back(step);
        placed = true;
        break;
      }
      std::swap(carry, *it);
    }
    if (!placed) {
      p.push_back({carry});
      q.push_back({step});
    }
  }
  return {StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

StandardTableau rsk_insertion(const Permutation& sigma) {
  return rsk(sigma).p;
}

Permutation inverse_rsk(const StandardTableau& p, const StandardTableau& q) {
  if (p.shape() != q.shape()) {
    throw std::invalid_argument("inverse_rsk requires equal shapes");
  }
  std::vector<std::vector<int>> prow = p.rows();
  std::vector<std::vector<int>> qrow = q.rows();
  const int n = p.size();
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {
    // k sits at the end of its row in q, at a corner of the shape
    std::size_t r = 0;
    while (r < qrow.size() && qrow[r].back() != k) ++r;
    if (r == qrow.size()) {
      throw std::invalid_argument(
          "recording tableau entries must be exactly {1..n}");
    }
    qrow[r].pop_back();
    int carry = prow[r].back();
    prow[r].pop_back();
    if (qrow[r].empty()) {
      qrow.erase(qrow.begin() + static_cast<std::ptrdiff_t>(r));
      prow.erase(prow.begin() + static_cast<std::ptrdiff_t>(r));
    }
    for (std::size_t up = r; up-- > 0;) {
      auto it = std::lower_bound(prow[up].begin(), prow[up].end(), carry);
      --it;  // largest entry < carry; exists for any same-shape SYT pair
      std::swap(carry, *it);
    }
    word[static_cast<std::size_t>(k) - 1] = carry;
  }
  return Permutation(std::move(word));
}

Permutation reading_word(const StandardTableau& t) {
  return Permutation(reading_letters(t));
}

std::vector<StandardTableau> enumerate_tableaux(int n) {
  std::vector<StandardTableau> out = {StandardTableau()};
  for (int k = 1; k <= n; ++k) {
    std::vector<StandardTableau> next;
    for (const auto& t : out) {
      const auto& rows = t.rows();
      for (std::size_t r = 0; r <= rows.size(); ++r) {
        const std::size_t len = r < rows.size() ? rows[r].size() : 0;
        const std::size_t above = r == 0 ? static_cast<std::size_t>(k) : rows[r - 1].size();
        if (len >= above) continue;  // not an addable corner
        auto grown = rows;
        if (r < grown.size()) {
          grown[r].push_back(k);
        } else {
          grown.push_back({k});
        }
        next.emplace_back(std::move(grown));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StandardTableau> tableaux_of_shape(const Shape& shape) {
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] < 1 || (i > 0 && shape[i] > shape[i - 1])) {
      throw std::invalid_argument("not a partition shape");
    }
  }
  int n = 0;
  for (int part : shape) n += part;
  std::vector<StandardTableau> out = {StandardTableau()};
  for (int k = 1; k <= n; ++k) {
    std::vector<StandardTableau> next;
    for (const auto& t : out) {
      const auto& rows = t.rows();
      for (std::size_t r = 0; r <= rows.size() && r < shape.size(); ++r) {
        const std::size_t len = r < rows.size() ? rows[r].size() : 0;
        const std::size_t above = r == 0 ? static_cast<std::size_t>(k) : rows[r - 1].size();
        if (len >= above || len >= static_cast<std::size_t>(shape[r])) continue;
        auto grown = rows;
        if (r < grown.size()) {
          grown[r].push_back(k);
        } else {
          grown.push_back({k});
        }
        next.emplace_back(std::move(grown));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> plactic_class(const StandardTableau& t) {
  std::vector<Permutation> out;
  for (const auto& q : tableaux_of_shape(t.shape())) {
    out.push_back(inverse_rsk(t, q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> knuth_neighbors(const Word& w) {
  if (has_duplicates(w)) {
    throw std::invalid_argument("knuth_neighbors requires distinct letters");
  }
  std::vector<Word> out;
  const auto& a = w.letters();
  for (std::size_t p = 0; p + 2 < a.size(); ++p) {
    const int x = a[p], y = a[p + 1], z = a[p + 2];
    // jik <-> jki: swap the last two when they straddle the first
    if (std::min(y, z) < x && x < std::max(y, z)) {
      auto b = a;
      std::swap(b[p + 1], b[p + 2]);
      out.emplace_back(std::move(b));
    }
    // ikj <-> kij: swap the first two when they straddle the last
    if (std::min(x, y) < z && z < std::max(x, y)) {
      auto b = a;
      std::swap(b[p], b[p + 1]);
      out.emplace_back(std::move(b));
    }
  }
  // two moves at overlapping sites can coincide (e.g. 2143 -> 2413 both ways)
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StandardTableau left_shifted_concat(const StandardTableau& v,
                                    const StandardTableau& u) {
  return rsk_insertion(left_shifted_concat(reading_word(v), reading_word(u)));
}

StandardTableau right_shifted_concat(const StandardTableau& a,
                                     const StandardTableau& b) {
  return rsk_insertion(right_shifted_concat(reading_word(a), reading_word(b)));
}

StandardTableau restrict_std(const StandardTableau& t, int lo, int hi) {
  const Word sub = restrict_to(reading_word(t).word(), lo, hi);
  return rsk_insertion(standardize(sub));
}

StandardTableau restrict_std(const StandardTableau& t,
                             const std::set<int>& values) {
  if (!values.empty()) {
    const int lo = *values.begin(), hi = *values.rbegin();
    if (hi - lo + 1 != static_cast<int>(values.size())) {
      throw std::invalid_argument(
          "restrict_std requires an interval of values");
    }
    return restrict_std(t, lo, hi);
  }
  return StandardTableau();
}

namespace {

// T splits at p iff gluing its two standardized halves back gives T.
bool splits_at(const StandardTableau& t, int p) {
  const StandardTableau low = restrict_std(t, 1, p);
  const StandardTableau high = restrict_std(t, p + 1, t.size());
  return left_shifted_concat(high, low) == t;
}

}  // namespace

bool is_indecomposable(const StandardTableau& t) {
  if (t.empty()) {
    throw std::invalid_argument(
        "the empty tableau is the unit, neither decomposable nor "
        "indecomposable");
  }
  for (int p = 1; p < t.size(); ++p) {
    if (splits_at(t, p)) return false;
  }
  return true;
}

std::vector<StandardTableau> indecomposable_factors(const StandardTableau& t) {
  std::vector<StandardTableau> factors;
  StandardTableau rest = t;
  while (!rest.empty()) {
    int p = 1;
    while (p < rest.size() && !splits_at(rest, p)) ++p;
    // smallest split peels off the rightmost (lowest-valued) factor
    factors.push_back(restrict_std(rest, 1, p));
    rest = restrict_std(rest, p + 1, rest.size());
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

long long count_indecomposable(int n) {
  long long count = 0;
  for (const auto& t : enumerate_tableaux(n)) {
    if (is_indecomposable(t)) ++count;
  }
  return count;
}

}  // namespace fsym
