#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "fsym/lincomb.hpp"
#include "fsym/permutation.hpp"
#include "fsym/poset.hpp"
#include "fsym/tableau.hpp"

namespace fsym {

// Text forms. A permutation prints as concatenated digits up to rank 9 and
// comma-separated above; the empty permutation is "e". A tableau prints its
// rows joined by "/" from row 1 down, entries concatenated up to rank 9 and
// space-separated above; the empty tableau is "e". Combinations print as
// "c*key" terms joined by " + " / " - "; monomial coordinates wrap keys as
// "M(key)"; tensor keys print as "(left (x) right)".

std::string to_text(const Permutation& p);
std::string to_text(const StandardTableau& t);
std::string to_text(const LinComb<Permutation>& x);
std::string to_text(const LinComb<StandardTableau>& x);
std::string to_text(const TensorComb<Permutation>& x);
std::string to_text(const TensorComb<StandardTableau>& x);
std::string to_text(const MonomialCoords<Permutation>& x);
std::string to_text(const MonomialCoords<StandardTableau>& x);

Permutation parse_permutation(std::string_view text);
StandardTableau parse_tableau(std::string_view text);
LinComb<Permutation> parse_lincomb_perm(std::string_view text);
LinComb<StandardTableau> parse_lincomb_tab(std::string_view text);
TensorComb<Permutation> parse_tensor_perm(std::string_view text);
TensorComb<StandardTableau> parse_tensor_tab(std::string_view text);
MonomialCoords<Permutation> parse_monomial_perm(std::string_view text);
MonomialCoords<StandardTableau> parse_monomial_tab(std::string_view text);

// JSON forms: a tableau is its list of rows; a combination is a list of
// {coeff, key} objects with the coefficient in decimal; tensors use
// {coeff, left, right}.

nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const StandardTableau& t);
nlohmann::json to_json(const LinComb<Permutation>& x);
nlohmann::json to_json(const LinComb<StandardTableau>& x);
nlohmann::json to_json(const TensorComb<Permutation>& x);
nlohmann::json to_json(const TensorComb<StandardTableau>& x);
nlohmann::json to_json(const MonomialCoords<Permutation>& x);
nlohmann::json to_json(const MonomialCoords<StandardTableau>& x);

Permutation permutation_from_json(const nlohmann::json& j);
StandardTableau tableau_from_json(const nlohmann::json& j);
LinComb<Permutation> lincomb_perm_from_json(const nlohmann::json& j);
LinComb<StandardTableau> lincomb_tab_from_json(const nlohmann::json& j);

/// Two-dimensional cell rendering; `french` puts row 1 at the bottom.
std::string render_grid(const StandardTableau& t, bool french);

/// Cover edge list, one "x < y" line per cover.
template <typename Key>
std::string export_covers(const FinitePoset<Key>& poset) {
  std::string out;
  for (const auto& [i, j] : poset.cover_pairs()) {
    out += to_text(poset.element(i));
    out += " < ";
    out += to_text(poset.element(j));
    out += '\n';
  }
  return out;
}

}  // namespace fsym
