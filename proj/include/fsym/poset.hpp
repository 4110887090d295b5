#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fsym/lincomb.hpp"
#include "fsym/permutation.hpp"
#include "fsym/tableau.hpp"

namespace fsym {

namespace detail {

/// Square bit matrix, row-major over 64-bit words.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n)
      : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {}

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * stride_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) {
    bits_[i * stride_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  void or_row(std::size_t dst, std::size_t src) {
    auto* d = &bits_[dst * stride_];
    const auto* s = &bits_[src * stride_];
    for (std::size_t w = 0; w < stride_; ++w) d[w] |= s[w];
  }

 private:
  std::size_t n_;
  std::size_t stride_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace detail

/// A finite poset given by generating relations over an indexed element list.
/// Construction computes the reflexive-transitive closure, rejects cycles
/// (naming a witness), and reduces the generators to the true cover
/// relations. Frozen and safely shareable after construction; the Möbius
/// memo is guarded so concurrent readers observe consistent values.
template <typename Key>
class FinitePoset {
 public:
  FinitePoset(std::vector<Key> elements,
              std::vector<std::pair<int, int>> relations)
      : elements_(std::move(elements)),
        reach_(elements_.size()) {
    const std::size_t n = elements_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!index_.emplace(elements_[i], static_cast<int>(i)).second) {
        throw std::invalid_argument("poset elements must be distinct");
      }
    }
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : relations) {
      if (a < 0 || b < 0 || a >= static_cast<int>(n) || b >= static_cast<int>(n)) {
        throw std::invalid_argument("poset relation index out of range");
      }
      adj[static_cast<std::size_t>(a)].push_back(b);
    }
    for (auto& row : adj) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    build_closure(adj);
    reduce_covers(adj);
    memo_ = std::make_unique<MobiusMemo>();
  }

  static FinitePoset from_covers(std::vector<Key> elements,
                                 const std::vector<std::pair<Key, Key>>& pairs) {
    std::map<Key, int> idx;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      idx.emplace(elements[i], static_cast<int>(i));
    }
    std::vector<std::pair<int, int>> rel;
    rel.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      auto ia = idx.find(a), ib = idx.find(b);
      if (ia == idx.end() || ib == idx.end()) {
        throw std::invalid_argument("cover pair mentions unknown element");
      }
      rel.emplace_back(ia->second, ib->second);
    }
    return FinitePoset(std::move(elements), std::move(rel));
  }

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Key>& elements() const { return elements_; }
  const Key& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }

  int index_of(const Key& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) {
      throw std::invalid_argument("element not in poset");
    }
    return it->second;
  }
  bool contains(const Key& x) const { return index_.count(x) != 0; }

  bool leq_index(int i, int j) const {
    return reach_.get(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  bool leq(const Key& x, const Key& y) const {
    return leq_index(index_of(x), index_of(y));
  }

  /// Indices z with x <= z <= y, ascending; empty when x is not below y.
  std::vector<int> interval_indices(int i, int j) const {
    std::vector<int> out;
    if (!leq_index(i, j)) return out;
    for (int z = 0; z < size(); ++z) {
      if (leq_index(i, z) && leq_index(z, j)) out.push_back(z);
    }
    return out;
  }
  std::vector<Key> interval(const Key& x, const Key& y) const {
    std::vector<Key> out;
    for (int z : interval_indices(index_of(x), index_of(y))) {
      out.push_back(elements_[static_cast<std::size_t>(z)]);
    }
    return out;
  }

  std::vector<int> upset_indices(int i) const {
    std::vector<int> out;
    for (int z = 0; z < size(); ++z) {
      if (leq_index(i, z)) out.push_back(z);
    }
    return out;
  }

  /// True cover relations (index pairs), sorted.
  const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }

  Int mobius(const Key& x, const Key& y) const {
    return mobius_index(index_of(x), index_of(y));
  }

  Int mobius_index(int i, int j) const {
    std::lock_guard<std::mutex> lock(memo_->mu);
    return mobius_locked(i, j);
  }

 private:
  struct MobiusMemo {
    mutable std::mutex mu;
    std::map<std::pair<int, int>, Int> values;
  };

  void build_closure(const std::vector<std::vector<int>>& adj) {
    const std::size_t n = elements_.size();
    // Kahn's algorithm; leftovers witness a cycle.
    std::vector<int> indeg(n, 0);
    for (const auto& row : adj) {
      for (int j : row) ++indeg[static_cast<std::size_t>(j)];
    }
    std::vector<int> order;
    order.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (indeg[i] == 0) order.push_back(static_cast<int>(i));
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (int j : adj[static_cast<std::size_t>(order[head])]) {
        if (--indeg[static_cast<std::size_t>(j)] == 0) order.push_back(j);
      }
    }
    if (order.size() < n) {
      throw std::invalid_argument("relations contain a cycle: " +
                                  witness_cycle(adj, indeg));
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto i = static_cast<std::size_t>(*it);
      reach_.set(i, i);
      for (int j : adj[i]) reach_.or_row(i, static_cast<std::size_t>(j));
    }
  }

  std::string witness_cycle(const std::vector<std::vector<int>>& adj,
                            const std::vector<int>& indeg) const {
    const std::size_t n = elements_.size();
    // trim residual vertices that cannot continue a walk, so every
    // remaining vertex has a remaining successor and the walk must cycle
    std::vector<bool> alive(n);
    for (std::size_t i = 0; i < n; ++i) alive[i] = indeg[i] > 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        bool has_successor = false;
        for (int w : adj[i]) {
          if (alive[static_cast<std::size_t>(w)]) {
            has_successor = true;
            break;
          }
        }
        if (!has_successor) {
          alive[i] = false;
          changed = true;
        }
      }
    }
    std::size_t start = 0;
    while (start < n && !alive[start]) ++start;
    std::vector<int> seen(n, -1);
    std::vector<int> path;
    int v = static_cast<int>(start);
    while (seen[static_cast<std::size_t>(v)] < 0) {
      seen[static_cast<std::size_t>(v)] = static_cast<int>(path.size());
      path.push_back(v);
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (alive[static_cast<std::size_t>(w)]) {
          v = w;
          break;
        }
      }
    }
    std::ostringstream os;
    auto describe = [&](int i) {
      if constexpr (requires(std::ostream& s, const Key& k) { s << k; }) {
        os << elements_[static_cast<std::size_t>(i)];
      } else {
        os << '#' << i;
      }
    };
    for (std::size_t k = static_cast<std::size_t>(seen[static_cast<std::size_t>(v)]);
         k < path.size(); ++k) {
      describe(path[k]);
      os << " < ";
    }
    describe(v);
    return os.str();
  }

  void reduce_covers(const std::vector<std::vector<int>>& adj) {
    for (std::size_t i = 0; i < adj.size(); ++i) {
      for (int j : adj[i]) {
        if (static_cast<int>(i) == j) continue;
        if (interval_indices(static_cast<int>(i), j).size() == 2) {
          covers_.emplace_back(static_cast<int>(i), j);
        }
      }
    }
    std::sort(covers_.begin(), covers_.end());
  }

  Int mobius_locked(int i, int j) const {
    if (i == j) return 1;
    if (!leq_index(i, j)) return 0;
    const auto key = std::make_pair(i, j);
    auto it = memo_->values.find(key);
    if (it != memo_->values.end()) return it->second;
    Int sum = 0;
    for (int z : interval_indices(i, j)) {
      if (z != j) sum += mobius_locked(i, z);
    }
    Int value = -sum;
    memo_->values.emplace(key, value);
    return value;
  }

  std::vector<Key> elements_;
  std::map<Key, int> index_;
  detail::BitMatrix reach_;
  std::vector<std::pair<int, int>> covers_;
  std::unique_ptr<MobiusMemo> memo_;
};

/// The right weak order on all of S_n. Elements in lexicographic order.
FinitePoset<Permutation> weak_order_poset(int n);

/// The weak order on tableaux with n entries: reflexive-transitive closure
/// of the projection of the weak-order covers through the insertion map.
/// Antisymmetry is asserted at construction.
FinitePoset<StandardTableau> taskin_poset(int n);

/// Lazily built, cached posets per rank. Thread-safe.
class PosetBank {
 public:
  const FinitePoset<Permutation>& weak(int n);
  const FinitePoset<StandardTableau>& taskin(int n);

  template <typename B>
  const FinitePoset<B>& poset(int n);

 private:
  std::mutex mu_;
  std::map<int, std::unique_ptr<FinitePoset<Permutation>>> weak_;
  std::map<int, std::unique_ptr<FinitePoset<StandardTableau>>> taskin_;
};

template <>
inline const FinitePoset<Permutation>& PosetBank::poset<Permutation>(int n) {
  return weak(n);
}
template <>
inline const FinitePoset<StandardTableau>& PosetBank::poset<StandardTableau>(
    int n) {
  return taskin(n);
}

}  // namespace fsym
