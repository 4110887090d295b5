#pragma once

#include <vector>

#include "fsym/lincomb.hpp"
#include "fsym/permutation.hpp"
#include "fsym/poset.hpp"
#include "fsym/tableau.hpp"

namespace fsym {

// ---------------------------------------------------------------------------
// Product and coproduct on the permutation algebra

/// Destandardized concatenation: the sum of all words uv with st(u) = alpha
/// and st(v) = beta, one per |alpha|-subset of {1,...,|alpha|+|beta|}.
LinComb<Permutation> hopf_product(const Permutation& alpha,
                                  const Permutation& beta);

/// Standardized unshuffling: sum over value cuts i of
/// sigma|{1..i} (x) st(sigma|{i+1..n}).
TensorComb<Permutation> coproduct(const Permutation& sigma);

/// All interleavings of a with b shifted up by |a|, coefficient 1 each.
LinComb<Permutation> shifted_shuffle(const Permutation& a,
                                     const Permutation& b);

// ---------------------------------------------------------------------------
// Product and coproduct on the tableau quotient

/// Image of hopf_product under insertion, on any representatives.
LinComb<StandardTableau> hopf_product(const StandardTableau& a,
                                      const StandardTableau& b);

/// Sum over value cuts p of st(T|{1..p}) (x) st(T|{p+1..n}).
TensorComb<StandardTableau> coproduct(const StandardTableau& t);

/// Interval sum between the two shifted concatenations in the tableau weak
/// order; `poset` must be the rank-(|a|+|b|) tableau poset.
LinComb<StandardTableau> shifted_shuffle(
    const StandardTableau& a, const StandardTableau& b,
    const FinitePoset<StandardTableau>& poset);

// ---------------------------------------------------------------------------
// Bilinear extensions

template <typename B, typename Product>
LinComb<B> bilinear(const LinComb<B>& x, const LinComb<B>& y,
                    Product&& product) {
  LinComb<B> out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      LinComb<B> ab = product(a, b);
      ab *= ca * cb;
      out += ab;
    }
  }
  return out;
}

template <typename B>
LinComb<B> hopf_product(const LinComb<B>& x, const LinComb<B>& y) {
  return bilinear(x, y,
                  [](const B& a, const B& b) { return hopf_product(a, b); });
}

template <typename B>
TensorComb<B> coproduct(const LinComb<B>& x) {
  TensorComb<B> out;
  for (const auto& [b, c] : x.terms()) {
    for (const auto& [key, d] : coproduct(b).terms()) {
      out.add(key.first, key.second, c * d);
    }
  }
  return out;
}

/// Componentwise product on tensors: (a(x)b)(c(x)d) = ac (x) bd.
template <typename B>
TensorComb<B> hopf_product(const TensorComb<B>& x, const TensorComb<B>& y) {
  TensorComb<B> out;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const auto left = hopf_product(kx.first, ky.first);
      const auto right = hopf_product(kx.second, ky.second);
      for (const auto& [a, ca] : left.terms()) {
        for (const auto& [b, cb] : right.terms()) {
          out.add(a, b, cx * cy * ca * cb);
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monomial basis via Möbius inversion

/// Rank of a homogeneous combination; rejects mixed ranks.
template <typename B>
int homogeneous_rank(const LinComb<B>& x);

/// Fundamental-basis expansion of sum_b c_b M_b, where
/// M_b = sum_{b <= w} mobius(b, w) w. The poset must match the rank.
template <typename B>
LinComb<B> from_monomial(const MonomialCoords<B>& c, const FinitePoset<B>& p) {
  LinComb<B> out;
  for (const auto& [b, coeff] : c.coords.terms()) {
    const int i = p.index_of(b);
    for (int w : p.upset_indices(i)) {
      out.add(p.element(w), coeff * p.mobius_index(i, w));
    }
  }
  return out;
}

/// M-coordinates of a homogeneous combination: since b = sum_{b <= w} M_w,
/// the coefficient on M_w is the sum of input coefficients over the downset
/// of w. Inverse of from_monomial.
template <typename B>
MonomialCoords<B> to_monomial(const LinComb<B>& x, const FinitePoset<B>& p) {
  homogeneous_rank(x);
  MonomialCoords<B> out;
  for (const auto& [b, coeff] : x.terms()) {
    const int i = p.index_of(b);
    for (int w : p.upset_indices(i)) {
      out.coords.add(p.element(w), coeff);
    }
  }
  return out;
}

/// Tensor legs converted to M-coordinates rank split by rank split.
template <typename B>
TensorComb<B> tensor_to_monomial(const TensorComb<B>& t, PosetBank& bank);

// ---------------------------------------------------------------------------
// Coproducts of monomial elements, computed from the factorization theory

/// Coproduct of M_sigma in M-coordinates: one term M_u (x) M_v per way of
/// writing sigma = left_shifted_concat(v, u). A k-factor element yields
/// k + 1 terms.
TensorComb<Permutation> coproduct_monomial(const Permutation& sigma);

/// Coproduct of M_T in M-coordinates: one term per value cut p at which the
/// two standardized halves glue back to T.
TensorComb<StandardTableau> coproduct_monomial(const StandardTableau& t);

// ---------------------------------------------------------------------------
// Primitive elements

/// True iff coproduct(x) = x (x) unit + unit (x) x. Requires a homogeneous
/// combination of rank >= 1.
bool is_primitive(const LinComb<Permutation>& x);
bool is_primitive(const LinComb<StandardTableau>& x);

/// The indecomposable tableaux with n entries; their M-elements span the
/// rank-n primitives of the tableau algebra.
std::vector<StandardTableau> primitive_basis(int n);

/// Structure constants of the tableau algebra in the monomial basis:
/// M-coordinates of M_A * M_B. May be negative.
MonomialCoords<StandardTableau> monomial_product(const StandardTableau& a,
                                                 const StandardTableau& b,
                                                 PosetBank& bank);

// ---------------------------------------------------------------------------

template <typename B>
int homogeneous_rank(const LinComb<B>& x) {
  int rank = -1;
  for (const auto& [b, c] : x.terms()) {
    if (rank < 0) {
      rank = b.size();
    } else if (b.size() != rank) {
      throw std::invalid_argument("combination is not homogeneous");
    }
  }
  return rank;
}

template <typename B>
TensorComb<B> tensor_to_monomial(const TensorComb<B>& t, PosetBank& bank) {
  // zeta transform, one leg at a time
  TensorComb<B> left_done;
  for (const auto& [key, c] : t.terms()) {
    const auto& p = bank.poset<B>(key.first.size());
    const int i = p.index_of(key.first);
    for (int w : p.upset_indices(i)) {
      left_done.add(p.element(w), key.second, c);
    }
  }
  TensorComb<B> out;
  for (const auto& [key, c] : left_done.terms()) {
    const auto& p = bank.poset<B>(key.second.size());
    const int i = p.index_of(key.second);
    for (int w : p.upset_indices(i)) {
      out.add(key.first, p.element(w), c);
    }
  }
  return out;
}

}  // namespace fsym
