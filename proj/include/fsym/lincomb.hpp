#pragma once

#include <map>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace fsym {

/// Exact integer coefficients; overflow is impossible by construction.
using Int = boost::multiprecision::cpp_int;

/// A finitely supported integer combination of basis indices. Terms are
/// kept in the canonical basis order and zero coefficients are never stored,
/// so equality is structural.
template <typename B>
class LinComb {
 public:
  LinComb() = default;

  static LinComb unit(const B& b) {
    LinComb x;
    x.add(b, 1);
    return x;
  }

  void add(const B& key, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
  }

  // the rvalue overload keeps `for (... : f().terms())` well defined
  const std::map<B, Int>& terms() const& { return terms_; }
  std::map<B, Int> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Int coefficient(const B& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Int(0) : it->second;
  }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Int& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Int& s, LinComb a) { return a *= s; }

  friend bool operator==(const LinComb& a, const LinComb& b) = default;

 private:
  std::map<B, Int> terms_;
};

/// A finitely supported integer combination of ordered basis pairs
/// (coproduct values live here).
template <typename B>
class TensorComb {
 public:
  using Key = std::pair<B, B>;

  TensorComb() = default;

  static TensorComb unit(const B& left, const B& right) {
    TensorComb x;
    x.add(left, right, 1);
    return x;
  }

  void add(const B& left, const B& right, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(std::make_pair(left, right), coeff);
    if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
  }

  const std::map<Key, Int>& terms() const& { return terms_; }
  std::map<Key, Int> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Int coefficient(const B& left, const B& right) const {
    auto it = terms_.find(std::make_pair(left, right));
    return it == terms_.end() ? Int(0) : it->second;
  }

  TensorComb& operator+=(const TensorComb& other) {
    for (const auto& [k, c] : other.terms_) add(k.first, k.second, c);
    return *this;
  }
  TensorComb& operator-=(const TensorComb& other) {
    for (const auto& [k, c] : other.terms_) add(k.first, k.second, -c);
    return *this;
  }

  friend bool operator==(const TensorComb& a, const TensorComb& b) = default;

 private:
  std::map<Key, Int> terms_;
};

/// Coordinates in the monomial basis. Structurally a coefficient map, but a
/// distinct type so fundamental-basis and M-basis values cannot be mixed up.
template <typename B>
struct MonomialCoords {
  LinComb<B> coords;

  static MonomialCoords unit(const B& b) { return {LinComb<B>::unit(b)}; }

  friend bool operator==(const MonomialCoords& a,
                         const MonomialCoords& b) = default;
};

}  // namespace fsym
