#include "fsym/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fsym {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int x : letters_) {
    if (x < 1) {
      throw std::invalid_argument("word letter must be positive, got " +
                                  std::to_string(x));
    }
  }
}

Word restrict_to(const Word& w, const std::set<int>& values) {
  std::vector<int> out;
  for (int x : w) {
    if (values.count(x)) out.push_back(x);
  }
  return Word(std::move(out));
}

Word restrict_to(const Word& w, int lo, int hi) {
  std::vector<int> out;
  for (int x : w) {
    if (lo <= x && x <= hi) out.push_back(x);
  }
  return Word(std::move(out));
}

std::vector<Inversion> inversions(const Word& w) {
  std::vector<Inversion> inv;
  const auto& a = w.letters();
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t q = p + 1; q < a.size(); ++q) {
      if (a[p] > a[q]) inv.emplace_back(a[p], a[q]);
    }
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

Word reversed(const Word& w) {
  std::vector<int> out(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(out));
}

bool has_duplicates(const Word& w) {
  std::vector<int> a = w.letters();
  std::sort(a.begin(), a.end());
  return std::adjacent_find(a.begin(), a.end()) != a.end();
}

}  // namespace fsym
