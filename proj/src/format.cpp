#include "fsym/format.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace fsym {

namespace {

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_entry(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("empty number token");
  int value = 0;
  for (char ch : token) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("bad number token '" + std::string(token) +
                                  "'");
    }
    value = value * 10 + (ch - '0');
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::vector<std::vector<int>> rows_single_digit(
    const std::vector<std::string_view>& parts) {
  std::vector<std::vector<int>> rows;
  for (auto part : parts) {
    std::vector<int> row;
    for (char ch : part) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0') {
        throw std::invalid_argument("bad tableau row");
      }
      row.push_back(ch - '0');
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<int>> rows_tokenized(
    const std::vector<std::string_view>& parts) {
  std::vector<std::vector<int>> rows;
  for (auto part : parts) {
    std::vector<int> row;
    for (auto token : split(part, ' ')) {
      if (token.empty()) continue;
      row.push_back(parse_entry(token));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename B, typename KeyText>
std::string comb_to_text(const std::map<B, Int>& terms, KeyText&& key_text) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : terms) {
    const bool negative = coeff < 0;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    os << boost::multiprecision::abs(coeff) << '*' << key_text(key);
  }
  return os.str();
}

struct ParsedTerm {
  Int coeff;
  std::string_view key;
};

// "c*key [+|-] c*key ..." with an optional leading sign.
std::vector<ParsedTerm> parse_terms(std::string_view text) {
  text = trimmed(text);
  std::vector<ParsedTerm> out;
  if (text == "0" || text.empty()) return out;
  int sign = 1;
  if (text.front() == '-') {
    sign = -1;
    text.remove_prefix(1);
  } else if (text.front() == '+') {
    text.remove_prefix(1);
  }
  while (true) {
    text = trimmed(text);
    // the term ends at the next top-level " + " or " - "
    std::size_t end = text.size();
    int next_sign = 0;
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (depth == 0 && i + 2 < text.size() && text[i] == ' ' &&
          (text[i + 1] == '+' || text[i + 1] == '-') && text[i + 2] == ' ') {
        end = i;
        next_sign = text[i + 1] == '+' ? 1 : -1;
        break;
      }
    }
    std::string_view term = trimmed(text.substr(0, end));
    const auto star = term.find('*');
    if (star == std::string_view::npos) {
      throw std::invalid_argument("term '" + std::string(term) +
                                  "' lacks a coefficient");
    }
    Int coeff(std::string(trimmed(term.substr(0, star))));
    out.push_back({sign * coeff, trimmed(term.substr(star + 1))});
    if (end == text.size()) break;
    sign = next_sign;
    text.remove_prefix(end + 3);
  }
  return out;
}

// "(left (x) right)" or "(left ⊗ right)"
std::pair<std::string_view, std::string_view> split_tensor_key(
    std::string_view key) {
  key = trimmed(key);
  if (key.size() < 2 || key.front() != '(' || key.back() != ')') {
    throw std::invalid_argument("tensor key must be parenthesized");
  }
  key = trimmed(key.substr(1, key.size() - 2));
  for (std::string_view sep : {std::string_view("(x)"), std::string_view("⊗")}) {
    const auto pos = key.find(sep);
    if (pos != std::string_view::npos) {
      return {trimmed(key.substr(0, pos)), trimmed(key.substr(pos + sep.size()))};
    }
  }
  throw std::invalid_argument("tensor key lacks a separator");
}

std::string_view unwrap_monomial_key(std::string_view key) {
  key = trimmed(key);
  if (key.size() < 3 || key.substr(0, 2) != "M(" || key.back() != ')') {
    throw std::invalid_argument("monomial key must look like M(key)");
  }
  return trimmed(key.substr(2, key.size() - 3));
}

template <typename B, typename KeyParse>
LinComb<B> parse_comb(std::string_view text, KeyParse&& key_parse) {
  LinComb<B> out;
  for (const auto& term : parse_terms(text)) {
    out.add(key_parse(term.key), term.coeff);
  }
  return out;
}

template <typename B, typename KeyParse>
TensorComb<B> parse_tensor(std::string_view text, KeyParse&& key_parse) {
  TensorComb<B> out;
  for (const auto& term : parse_terms(text)) {
    const auto [left, right] = split_tensor_key(term.key);
    out.add(key_parse(left), key_parse(right), term.coeff);
  }
  return out;
}

template <typename B, typename KeyText>
nlohmann::json comb_to_json(const std::map<B, Int>& terms,
                            KeyText&& key_text) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [key, coeff] : terms) {
    j.push_back({{"coeff", coeff.str()}, {"key", key_text(key)}});
  }
  return j;
}

template <typename B, typename KeyText>
nlohmann::json tensor_to_json(const TensorComb<B>& x, KeyText&& key_text) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [key, coeff] : x.terms()) {
    j.push_back({{"coeff", coeff.str()},
                 {"left", key_text(key.first)},
                 {"right", key_text(key.second)}});
  }
  return j;
}

}  // namespace

std::string to_text(const Permutation& p) {
  if (p.empty()) return "e";
  std::ostringstream os;
  const bool wide = p.size() > 9;
  bool first = true;
  for (int x : p.word()) {
    if (!first && wide) os << ',';
    os << x;
    first = false;
  }
  return os.str();
}

std::string to_text(const StandardTableau& t) {
  if (t.empty()) return "e";
  std::ostringstream os;
  const bool wide = t.size() > 9;
  bool first_row = true;
  for (const auto& row : t.rows()) {
    if (!first_row) os << '/';
    bool first = true;
    for (int x : row) {
      if (!first && wide) os << ' ';
      os << x;
      first = false;
    }
    first_row = false;
  }
  return os.str();
}

std::string to_text(const LinComb<Permutation>& x) {
  return comb_to_text(x.terms(), [](const Permutation& p) { return to_text(p); });
}
std::string to_text(const LinComb<StandardTableau>& x) {
  return comb_to_text(x.terms(),
                      [](const StandardTableau& t) { return to_text(t); });
}

namespace {
template <typename B>
std::string tensor_text(const TensorComb<B>& x) {
  const auto& terms = x.terms();
  std::ostringstream os;
  if (terms.empty()) return "0";
  bool first = true;
  for (const auto& [key, coeff] : terms) {
    const bool negative = coeff < 0;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    os << boost::multiprecision::abs(coeff) << "*(" << to_text(key.first)
       << " (x) " << to_text(key.second) << ')';
  }
  return os.str();
}
}  // namespace

std::string to_text(const TensorComb<Permutation>& x) { return tensor_text(x); }
std::string to_text(const TensorComb<StandardTableau>& x) {
  return tensor_text(x);
}

std::string to_text(const MonomialCoords<Permutation>& x) {
  return comb_to_text(x.coords.terms(), [](const Permutation& p) {
    return "M(" + to_text(p) + ")";
  });
}
std::string to_text(const MonomialCoords<StandardTableau>& x) {
  return comb_to_text(x.coords.terms(), [](const StandardTableau& t) {
    return "M(" + to_text(t) + ")";
  });
}

Permutation parse_permutation(std::string_view text) {
  text = trimmed(text);
  if (text == "e") return Permutation();
  std::vector<int> letters;
  if (text.find(',') != std::string_view::npos) {
    for (auto token : split(text, ',')) {
      letters.push_back(parse_entry(trimmed(token)));
    }
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0') {
        throw std::invalid_argument("bad permutation '" + std::string(text) +
                                    "'");
      }
      letters.push_back(ch - '0');
    }
  }
  return Permutation(std::move(letters));
}

StandardTableau parse_tableau(std::string_view text) {
  text = trimmed(text);
  if (text == "e") return StandardTableau();
  const auto parts = split(text, '/');
  const bool has_space = text.find(' ') != std::string_view::npos;
  if (!has_space) {
    // try digit-per-character first; fall back to one number per row
    try {
      StandardTableau t(rows_single_digit(parts));
      if (has_standard_entries(t)) return t;
    } catch (const std::invalid_argument&) {
    }
  }
  StandardTableau t(rows_tokenized(parts));
  if (!has_standard_entries(t)) {
    throw std::invalid_argument("tableau entries must be exactly {1..n}: " +
                                std::string(text));
  }
  return t;
}

LinComb<Permutation> parse_lincomb_perm(std::string_view text) {
  return parse_comb<Permutation>(text, parse_permutation);
}
LinComb<StandardTableau> parse_lincomb_tab(std::string_view text) {
  return parse_comb<StandardTableau>(text, parse_tableau);
}
TensorComb<Permutation> parse_tensor_perm(std::string_view text) {
  return parse_tensor<Permutation>(text, parse_permutation);
}
TensorComb<StandardTableau> parse_tensor_tab(std::string_view text) {
  return parse_tensor<StandardTableau>(text, parse_tableau);
}
MonomialCoords<Permutation> parse_monomial_perm(std::string_view text) {
  return {parse_comb<Permutation>(text, [](std::string_view key) {
    return parse_permutation(unwrap_monomial_key(key));
  })};
}
MonomialCoords<StandardTableau> parse_monomial_tab(std::string_view text) {
  return {parse_comb<StandardTableau>(text, [](std::string_view key) {
    return parse_tableau(unwrap_monomial_key(key));
  })};
}

nlohmann::json to_json(const Permutation& p) {
  return nlohmann::json(p.letters());
}
nlohmann::json to_json(const StandardTableau& t) {
  return nlohmann::json(t.rows());
}
nlohmann::json to_json(const LinComb<Permutation>& x) {
  return comb_to_json(x.terms(), [](const Permutation& p) { return to_text(p); });
}
nlohmann::json to_json(const LinComb<StandardTableau>& x) {
  return comb_to_json(x.terms(),
                      [](const StandardTableau& t) { return to_text(t); });
}
nlohmann::json to_json(const TensorComb<Permutation>& x) {
  return tensor_to_json(x, [](const Permutation& p) { return to_text(p); });
}
nlohmann::json to_json(const TensorComb<StandardTableau>& x) {
  return tensor_to_json(x, [](const StandardTableau& t) { return to_text(t); });
}
nlohmann::json to_json(const MonomialCoords<Permutation>& x) {
  return comb_to_json(x.coords.terms(), [](const Permutation& p) {
    return "M(" + to_text(p) + ")";
  });
}
nlohmann::json to_json(const MonomialCoords<StandardTableau>& x) {
  return comb_to_json(x.coords.terms(), [](const StandardTableau& t) {
    return "M(" + to_text(t) + ")";
  });
}

Permutation permutation_from_json(const nlohmann::json& j) {
  return Permutation(j.get<std::vector<int>>());
}
StandardTableau tableau_from_json(const nlohmann::json& j) {
  return StandardTableau(j.get<std::vector<std::vector<int>>>());
}
LinComb<Permutation> lincomb_perm_from_json(const nlohmann::json& j) {
  LinComb<Permutation> out;
  for (const auto& term : j) {
    out.add(parse_permutation(term.at("key").get<std::string>()),
            Int(term.at("coeff").get<std::string>()));
  }
  return out;
}
LinComb<StandardTableau> lincomb_tab_from_json(const nlohmann::json& j) {
  LinComb<StandardTableau> out;
  for (const auto& term : j) {
    out.add(parse_tableau(term.at("key").get<std::string>()),
            Int(term.at("coeff").get<std::string>()));
  }
  return out;
}

std::string render_grid(const StandardTableau& t, bool french) {
  if (t.empty()) return "e\n";
  int width = 1;
  for (int v = t.size(); v >= 10; v /= 10) ++width;
  std::ostringstream os;
  auto emit_row = [&](const std::vector<int>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ' ';
      std::string cell = std::to_string(row[c]);
      os << std::string(static_cast<std::size_t>(width) - cell.size(), ' ')
         << cell;
    }
    os << '\n';
  };
  if (french) {
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) emit_row(*it);
  } else {
    for (const auto& row : t.rows()) emit_row(row);
  }
  return os.str();
}

}  // namespace fsym
