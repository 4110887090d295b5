#include "fsym/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

#include "fsym/format.hpp"
#include "fsym/hopf.hpp"

namespace fsym {

namespace {

struct Harness {
  SuiteResult result;

  template <typename Describe>
  bool require(bool ok, Describe&& describe) {
    ++result.checks;
    if (!ok) {
      result.pass = false;
      result.counterexample = describe();
    }
    return ok;
  }
};

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> letters(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) letters[static_cast<std::size_t>(i)] = i + 1;
  do {
    out.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

Permutation fold_left(const std::vector<Permutation>& factors) {
  Permutation acc;
  for (const auto& f : factors) acc = left_shifted_concat(acc, f);
  return acc;
}

StandardTableau fold_left(const std::vector<StandardTableau>& factors) {
  StandardTableau acc;
  for (const auto& f : factors) acc = left_shifted_concat(acc, f);
  return acc;
}

// ---------------------------------------------------------------------------

void suite_order_axioms(Harness& h, int nmax, PosetBank&) {
  for (int n = 0; n <= nmax; ++n) {
    const auto sn = all_permutations(n);
    const int count = static_cast<int>(sn.size());
    std::vector<std::vector<bool>> leq(
        static_cast<std::size_t>(count),
        std::vector<bool>(static_cast<std::size_t>(count)));
    for (int i = 0; i < count; ++i) {
      for (int j = 0; j < count; ++j) {
        leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            weak_leq(sn[static_cast<std::size_t>(i)],
                     sn[static_cast<std::size_t>(j)]);
      }
    }
    for (int i = 0; i < count; ++i) {
      if (!h.require(leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)],
                     [&] {
                       return "not reflexive at " +
                              to_text(sn[static_cast<std::size_t>(i)]);
                     })) {
        return;
      }
      for (int j = 0; j < count; ++j) {
        if (i != j &&
            leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
            leq[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
          h.require(false, [&] {
            return "antisymmetry fails at " +
                   to_text(sn[static_cast<std::size_t>(i)]) + ", " +
                   to_text(sn[static_cast<std::size_t>(j)]);
          });
          return;
        }
      }
    }
    for (int j = 0; j < count; ++j) {
      for (int i = 0; i < count; ++i) {
        if (!leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
        for (int k = 0; k < count; ++k) {
          if (leq[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]) {
            if (!h.require(
                    leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                    [&] {
                      return "transitivity fails through " +
                             to_text(sn[static_cast<std::size_t>(j)]);
                    })) {
              return;
            }
          }
        }
      }
    }
  }
}

void suite_covers(Harness& h, int nmax, PosetBank& bank) {
  for (int n = 0; n <= nmax; ++n) {
    const auto& poset = bank.weak(n);
    const auto& sn = poset.elements();
    // closure of the covers equals inversion-set containment
    for (std::size_t i = 0; i < sn.size(); ++i) {
      for (std::size_t j = 0; j < sn.size(); ++j) {
        const bool via_poset =
            poset.leq_index(static_cast<int>(i), static_cast<int>(j));
        const bool via_inv = weak_leq(sn[i], sn[j]);
        if (!h.require(via_poset == via_inv, [&] {
              return "closure/containment disagree at " + to_text(sn[i]) +
                     ", " + to_text(sn[j]);
            })) {
          return;
        }
      }
    }
    // adjacent-position swaps produce exactly the one-extra-inversion covers
    for (const auto& u : sn) {
      std::set<Permutation> swaps;
      for (const auto& v : weak_covers(u)) swaps.insert(v);
      std::set<Permutation> inv_covers;
      const auto iu = inversions(u.word());
      for (const auto& v : sn) {
        const auto iv = inversions(v.word());
        if (iv.size() == iu.size() + 1 &&
            std::includes(iv.begin(), iv.end(), iu.begin(), iu.end())) {
          inv_covers.insert(v);
        }
      }
      if (!h.require(swaps == inv_covers, [&] {
            return "cover definitions disagree at " + to_text(u);
          })) {
        return;
      }
    }
  }
}

void suite_lemma1(Harness& h, int nmax, PosetBank& bank) {
  for (int n = 0; n <= nmax; ++n) {
    const auto& poset = bank.weak(n);
    const auto& sn = poset.elements();
    for (std::size_t i = 0; i < sn.size(); ++i) {
      for (std::size_t j = 0; j < sn.size(); ++j) {
        if (!poset.leq_index(static_cast<int>(i), static_cast<int>(j))) continue;
        for (int lo = 1; lo <= n; ++lo) {
          for (int hi = lo; hi <= n; ++hi) {
            const auto s = standardize(restrict_to(sn[i].word(), lo, hi));
            const auto t = standardize(restrict_to(sn[j].word(), lo, hi));
            if (!h.require(weak_leq(s, t), [&] {
                  return "lemma1 fails: s=" + to_text(sn[i]) +
                         " t=" + to_text(sn[j]) + " I=[" + std::to_string(lo) +
                         "," + std::to_string(hi) + "]";
                })) {
              return;
            }
          }
        }
      }
    }
  }
}

void suite_lemma2(Harness& h, int nmax, PosetBank& bank) {
  for (int p = 0; p <= nmax; ++p) {
    for (int q = 0; p + q <= nmax; ++q) {
      const auto& pu = bank.weak(p);
      const auto& pv = bank.weak(q);
      for (int u = 0; u < pu.size(); ++u) {
        for (int u2 : pu.upset_indices(u)) {
          for (int v = 0; v < pv.size(); ++v) {
            for (int v2 : pv.upset_indices(v)) {
              const auto lhs =
                  left_shifted_concat(pv.element(v), pu.element(u));
              const auto rhs =
                  left_shifted_concat(pv.element(v2), pu.element(u2));
              if (!h.require(weak_leq(lhs, rhs), [&] {
                    return "lemma2 fails: u=" + to_text(pu.element(u)) +
                           " u'=" + to_text(pu.element(u2)) +
                           " v=" + to_text(pv.element(v)) +
                           " v'=" + to_text(pv.element(v2));
                  })) {
                return;
              }
            }
          }
        }
      }
    }
  }
}

void suite_lemma3(Harness& h, int nmax, PosetBank& bank) {
  for (int n = 0; n <= nmax; ++n) {
    const auto& poset = bank.weak(n);
    for (const auto& sigma : poset.elements()) {
      for (int p = 0; p <= n; ++p) {
        const int q = n - p;
        const Permutation a{restrict_to(sigma.word(), 1, p)};
        const Permutation b = standardize(restrict_to(sigma.word(), p + 1, n));
        const auto& pu = bank.weak(p);
        const auto& pv = bank.weak(q);
        const int ia = pu.index_of(a);
        const int ib = pv.index_of(b);
        for (int u = 0; u < pu.size(); ++u) {
          for (int v = 0; v < pv.size(); ++v) {
            const bool lhs = weak_leq(
                sigma, left_shifted_concat(pv.element(v), pu.element(u)));
            const bool rhs = pu.leq_index(ia, u) && pv.leq_index(ib, v);
            if (!h.require(lhs == rhs, [&] {
                  return "lemma3 fails: sigma=" + to_text(sigma) +
                         " p=" + std::to_string(p) +
                         " u=" + to_text(pu.element(u)) +
                         " v=" + to_text(pv.element(v));
                })) {
              return;
            }
          }
        }
      }
    }
  }
}

void suite_insertion_hom(Harness& h, int nmax, PosetBank&) {
  // insertion turns both shifted concatenations into tableau products
  for (int p = 0; p <= nmax; ++p) {
    for (int q = 0; p + q <= nmax; ++q) {
      for (const auto& u : all_permutations(p)) {
        for (const auto& v : all_permutations(q)) {
          const auto tri_ok =
              rsk_insertion(left_shifted_concat(v, u)) ==
              left_shifted_concat(rsk_insertion(v), rsk_insertion(u));
          const auto box_ok =
              rsk_insertion(right_shifted_concat(u, v)) ==
              right_shifted_concat(rsk_insertion(u), rsk_insertion(v));
          if (!h.require(tri_ok && box_ok, [&] {
                return "insertion homomorphism fails at v=" + to_text(v) +
                       " u=" + to_text(u);
              })) {
            return;
          }
        }
      }
    }
  }
}

void suite_lemma4(Harness& h, int nmax, PosetBank&) {
  for (int p = 1; p <= nmax; ++p) {
    for (int q = 1; p + q <= nmax; ++q) {
      for (const auto& t : enumerate_tableaux(p)) {
        const auto reps = plactic_class(t);
        for (const auto& w : all_permutations(q)) {
          std::set<StandardTableau> left_images, right_images;
          for (const auto& u : reps) {
            left_images.insert(rsk_insertion(left_shifted_concat(w, u)));
            right_images.insert(rsk_insertion(left_shifted_concat(u, w)));
          }
          if (!h.require(left_images.size() == 1 && right_images.size() == 1,
                         [&] {
                           return "lemma4 fails: class of " + to_text(t) +
                                  " with " + to_text(w);
                         })) {
            return;
          }
        }
      }
    }
  }
}

void suite_lemma5(Harness& h, int nmax, PosetBank& bank) {
  for (int p = 0; p <= nmax; ++p) {
    for (int q = 0; p + q <= nmax; ++q) {
      const auto& pu = bank.taskin(p);
      const auto& pv = bank.taskin(q);
      const auto& target = bank.taskin(p + q);
      for (int u = 0; u < pu.size(); ++u) {
        for (int u2 : pu.upset_indices(u)) {
          for (int v = 0; v < pv.size(); ++v) {
            for (int v2 : pv.upset_indices(v)) {
              const auto lhs =
                  left_shifted_concat(pv.element(v), pu.element(u));
              const auto rhs =
                  left_shifted_concat(pv.element(v2), pu.element(u2));
              if (!h.require(target.leq(lhs, rhs), [&] {
                    return "lemma5 fails: U=" + to_text(pu.element(u)) +
                           " U'=" + to_text(pu.element(u2)) +
                           " V=" + to_text(pv.element(v)) +
                           " V'=" + to_text(pv.element(v2));
                  })) {
                return;
              }
            }
          }
        }
      }
    }
  }
}

void suite_lemma6(Harness& h, int nmax, PosetBank& bank) {
  for (int n = 0; n <= nmax; ++n) {
    const auto& poset = bank.taskin(n);
    for (int i = 0; i < poset.size(); ++i) {
      for (int j : poset.upset_indices(i)) {
        for (int lo = 1; lo <= n; ++lo) {
          for (int hi = lo; hi <= n; ++hi) {
            const auto a = restrict_std(poset.element(i), lo, hi);
            const auto b = restrict_std(poset.element(j), lo, hi);
            const auto& small = bank.taskin(a.size());
            if (!h.require(small.leq(a, b), [&] {
                  return "lemma6 fails: A=" + to_text(poset.element(i)) +
                         " B=" + to_text(poset.element(j)) + " I=[" +
                         std::to_string(lo) + "," + std::to_string(hi) + "]";
                })) {
              return;
            }
          }
        }
      }
    }
  }
}

void suite_lemma7(Harness& h, int nmax, PosetBank& bank) {
  for (int n = 0; n <= nmax; ++n) {
    const auto& poset = bank.taskin(n);
    for (const auto& sigma : poset.elements()) {
      const int is = poset.index_of(sigma);
      for (int p = 0; p <= n; ++p) {
        const int q = n - p;
        const auto a = restrict_std(sigma, 1, p);
        const auto b = restrict_std(sigma, p + 1, n);
        const auto& pu = bank.taskin(p);
        const auto& pv = bank.taskin(q);
        const int ia = pu.index_of(a);
        const int ib = pv.index_of(b);
        for (int u = 0; u < pu.size(); ++u) {
          for (int v = 0; v < pv.size(); ++v) {
            const auto glued =
                left_shifted_concat(pv.element(v), pu.element(u));
            const bool lhs = poset.leq_index(is, poset.index_of(glued));
            const bool rhs = pu.leq_index(ia, u) && pv.leq_index(ib, v);
            if (!h.require(lhs == rhs, [&] {
                  return "lemma7 fails: Sigma=" + to_text(sigma) +
                         " p=" + std::to_string(p) +
                         " U=" + to_text(pu.element(u)) +
                         " V=" + to_text(pv.element(v));
                })) {
              return;
            }
          }
        }
      }
    }
  }
}

template <typename B>
bool check_monomial_coproduct(Harness& h, const B& b, PosetBank& bank) {
  const auto direct = coproduct_monomial(b);
  const auto expanded =
      from_monomial(MonomialCoords<B>::unit(b), bank.poset<B>(b.size()));
  const auto oracle = tensor_to_monomial(coproduct(expanded), bank);
  return h.require(direct == oracle, [&] {
    return "monomial coproduct mismatch at " + to_text(b);
  });
}

void suite_thm1(Harness& h, int nmax, PosetBank& bank) {
  for (int n = 0; n <= nmax; ++n) {
    for (const auto& sigma : all_permutations(n)) {
      if (!check_monomial_coproduct(h, sigma, bank)) return;
    }
  }
}

void suite_thm3(Harness& h, int nmax, PosetBank& bank) {
  for (int n = 0; n <= nmax; ++n) {
    for (const auto& t : enumerate_tableaux(n)) {
      if (!check_monomial_coproduct(h, t, bank)) return;
    }
  }
}

void suite_loday_ronco(Harness& h, int nmax, PosetBank& bank) {
  for (int p = 0; p <= nmax; ++p) {
    for (int q = 0; p + q <= nmax; ++q) {
      const auto& poset = bank.weak(p + q);
      for (const auto& a : all_permutations(p)) {
        for (const auto& b : all_permutations(q)) {
          const auto shuffle = shifted_shuffle(a, b);
          LinComb<Permutation> interval_sum;
          for (const auto& sigma : poset.interval(
                   right_shifted_concat(a, b), left_shifted_concat(b, a))) {
            interval_sum.add(sigma, 1);
          }
          if (!h.require(shuffle == interval_sum, [&] {
                return "interval formula fails: a=" + to_text(a) +
                       " b=" + to_text(b);
              })) {
            return;
          }
        }
      }
    }
  }
}

void suite_taskin(Harness& h, int nmax, PosetBank& bank) {
  for (int p = 0; p <= nmax; ++p) {
    for (int q = 0; p + q <= nmax; ++q) {
      const auto& poset = bank.taskin(p + q);
      for (const auto& a : enumerate_tableaux(p)) {
        for (const auto& b : enumerate_tableaux(q)) {
          const auto shuffle = shifted_shuffle(a, b, poset);
          for (const auto& sigma : poset.elements()) {
            const Int via_shuffle = shuffle.coefficient(sigma);
            const Int via_coproduct = coproduct(sigma).coefficient(a, b);
            if (!h.require(via_shuffle == via_coproduct, [&] {
                  return "duality pairing fails: A=" + to_text(a) +
                         " B=" + to_text(b) + " Sigma=" + to_text(sigma);
                })) {
              return;
            }
          }
        }
      }
    }
  }
}

void suite_duality(Harness& h, int nmax, PosetBank&) {
  for (int n = 0; n <= nmax; ++n) {
    for (const auto& sigma : enumerate_tableaux(n)) {
      const auto tm = coproduct_monomial(sigma);
      for (int p = 0; p <= n; ++p) {
        for (const auto& u : enumerate_tableaux(p)) {
          for (const auto& v : enumerate_tableaux(n - p)) {
            const Int expected = left_shifted_concat(v, u) == sigma ? 1 : 0;
            if (!h.require(tm.coefficient(u, v) == expected, [&] {
                  return "dual multiplicativity fails: Sigma=" +
                         to_text(sigma) + " U=" + to_text(u) +
                         " V=" + to_text(v);
                })) {
              return;
            }
          }
        }
      }
    }
  }
}

void suite_rsk(Harness& h, int nmax, PosetBank&) {
  for (int n = 0; n <= nmax; ++n) {
    for (const auto& sigma : all_permutations(n)) {
      const auto [p, q] = rsk(sigma);
      if (!h.require(p.shape() == q.shape() && inverse_rsk(p, q) == sigma,
                     [&] { return "round-trip fails at " + to_text(sigma); })) {
        return;
      }
    }
    // the image is exactly the same-shape pairs, and fibers partition S_n
    const auto tabs = enumerate_tableaux(n);
    long long pair_count = 0;
    long long fiber_total = 0;
    for (const auto& t : tabs) {
      const auto shape_mates = tableaux_of_shape(t.shape());
      pair_count += static_cast<long long>(shape_mates.size());
      fiber_total += static_cast<long long>(plactic_class(t).size());
      for (const auto& q : shape_mates) {
        const auto sigma = inverse_rsk(t, q);
        const auto back = rsk(sigma);
        if (!h.require(back.p == t && back.q == q, [&] {
              return "image fails at P=" + to_text(t) + " Q=" + to_text(q);
            })) {
          return;
        }
      }
    }
    long long factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    if (!h.require(pair_count == factorial && fiber_total == factorial, [&] {
          return "pair/fiber counts fail at n=" + std::to_string(n);
        })) {
      return;
    }
  }
}

void suite_knuth(Harness& h, int nmax, PosetBank&) {
  for (int n = 0; n <= nmax; ++n) {
    for (const auto& sigma : all_permutations(n)) {
      std::set<Word> closure = {sigma.word()};
      std::vector<Word> frontier = {sigma.word()};
      while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
          for (const auto& m : knuth_neighbors(w)) {
            if (closure.insert(m).second) next.push_back(m);
          }
        }
        frontier = std::move(next);
      }
      std::set<Word> fiber;
      for (const auto& tau : plactic_class(rsk_insertion(sigma))) {
        fiber.insert(tau.word());
      }
      if (!h.require(closure == fiber, [&] {
            return "knuth closure differs from fiber at " + to_text(sigma);
          })) {
        return;
      }
    }
  }
}

template <typename Key>
bool check_mobius_poset(Harness& h, const FinitePoset<Key>& poset,
                        unsigned seed) {
  for (int i = 0; i < poset.size(); ++i) {
    for (int j : poset.upset_indices(i)) {
      Int sum = 0;
      for (int z : poset.interval_indices(i, j)) {
        sum += poset.mobius_index(i, z);
      }
      const Int expected = i == j ? 1 : 0;
      if (!h.require(sum == expected, [&] {
            return "mobius identity fails at " + to_text(poset.element(i)) +
                   " <= " + to_text(poset.element(j));
          })) {
        return false;
      }
    }
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<Int> f(static_cast<std::size_t>(poset.size()));
  for (auto& x : f) x = dist(rng);
  for (int i = 0; i < poset.size(); ++i) {
    Int recovered = 0;
    for (int w : poset.upset_indices(i)) {
      Int g = 0;
      for (int z : poset.upset_indices(w)) g += f[static_cast<std::size_t>(z)];
      recovered += poset.mobius_index(i, w) * g;
    }
    if (!h.require(recovered == f[static_cast<std::size_t>(i)], [&] {
          return "inversion round-trip fails at " + to_text(poset.element(i));
        })) {
      return false;
    }
  }
  return true;
}

void suite_mobius(Harness& h, int nmax, PosetBank& bank) {
  for (int n = 0; n <= nmax; ++n) {
    if (!check_mobius_poset(h, bank.weak(n), 12021u + static_cast<unsigned>(n))) return;
    if (!check_mobius_poset(h, bank.taskin(n), 47110u + static_cast<unsigned>(n))) return;
  }
}

template <typename B>
bool check_mbasis_poset(Harness& h, const FinitePoset<B>& poset,
                        unsigned seed) {
  // a basis element expands with coefficient 1 on its upset
  for (int i = 0; i < poset.size(); ++i) {
    const auto coords =
        to_monomial(LinComb<B>::unit(poset.element(i)), poset);
    LinComb<B> expected;
    for (int w : poset.upset_indices(i)) expected.add(poset.element(w), 1);
    if (!h.require(coords.coords == expected, [&] {
          return "upset expansion fails at " + to_text(poset.element(i));
        })) {
      return false;
    }
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  MonomialCoords<B> coords;
  for (const auto& b : poset.elements()) coords.coords.add(b, dist(rng));
  const auto round =
      to_monomial(from_monomial(coords, poset), poset);
  if (!h.require(round == coords,
                 [&] { return std::string("round-trip fails"); })) {
    return false;
  }
  return true;
}

void suite_mbasis(Harness& h, int nmax, PosetBank& bank) {
  for (int n = 0; n <= nmax; ++n) {
    if (!check_mbasis_poset(h, bank.weak(n), 90125u + static_cast<unsigned>(n))) return;
    if (!check_mbasis_poset(h, bank.taskin(n), 30301u + static_cast<unsigned>(n))) return;
  }
}

template <typename B, typename Basis>
bool check_coassoc(Harness& h, const Basis& basis) {
  using Triple = std::tuple<B, B, B>;
  for (const auto& b : basis) {
    std::map<Triple, Int> left, right;
    for (const auto& [key, c] : coproduct(b).terms()) {
      for (const auto& [key2, d] : coproduct(key.first).terms()) {
        left[{key2.first, key2.second, key.second}] += c * d;
      }
      for (const auto& [key2, d] : coproduct(key.second).terms()) {
        right[{key.first, key2.first, key2.second}] += c * d;
      }
    }
    if (!h.require(left == right, [&] {
          return "coassociativity fails at " + to_text(b);
        })) {
      return false;
    }
  }
  return true;
}

void suite_coassoc(Harness& h, int nmax, PosetBank&) {
  for (int n = 0; n <= nmax; ++n) {
    if (!check_coassoc<Permutation>(h, all_permutations(n))) return;
    if (!check_coassoc<StandardTableau>(h, enumerate_tableaux(n))) return;
  }
}

template <typename B, typename Basis>
bool check_counit(Harness& h, const Basis& basis) {
  for (const auto& b : basis) {
    LinComb<B> keep_left, keep_right;
    for (const auto& [key, c] : coproduct(b).terms()) {
      if (key.second.empty()) keep_left.add(key.first, c);
      if (key.first.empty()) keep_right.add(key.second, c);
    }
    const auto expected = LinComb<B>::unit(b);
    if (!h.require(keep_left == expected && keep_right == expected,
                   [&] { return "counit law fails at " + to_text(b); })) {
      return false;
    }
  }
  return true;
}

void suite_counit(Harness& h, int nmax, PosetBank&) {
  for (int n = 0; n <= nmax; ++n) {
    if (!check_counit<Permutation>(h, all_permutations(n))) return;
    if (!check_counit<StandardTableau>(h, enumerate_tableaux(n))) return;
  }
}

void suite_bialgebra(Harness& h, int nmax, PosetBank&) {
  for (int p = 0; p <= nmax; ++p) {
    for (int q = 0; p + q <= nmax; ++q) {
      for (const auto& alpha : all_permutations(p)) {
        for (const auto& beta : all_permutations(q)) {
          const auto product = hopf_product(alpha, beta);
          const auto lhs = coproduct(product);
          const auto rhs = hopf_product(coproduct(alpha), coproduct(beta));
          if (!h.require(lhs == rhs, [&] {
                return "compatibility fails at " + to_text(alpha) + " * " +
                       to_text(beta);
              })) {
            return;
          }
          // the insertion map is a bialgebra morphism onto the quotient
          LinComb<StandardTableau> projected;
          for (const auto& [sigma, c] : product.terms()) {
            projected.add(rsk_insertion(sigma), c);
          }
          const auto tab_product =
              hopf_product(rsk_insertion(alpha), rsk_insertion(beta));
          if (!h.require(projected == tab_product, [&] {
                return "product projection fails at " + to_text(alpha) +
                       " * " + to_text(beta);
              })) {
            return;
          }
        }
      }
    }
  }
  for (int n = 0; n <= nmax; ++n) {
    for (const auto& sigma : all_permutations(n)) {
      TensorComb<StandardTableau> projected;
      for (const auto& [key, c] : coproduct(sigma).terms()) {
        projected.add(rsk_insertion(key.first), rsk_insertion(key.second), c);
      }
      if (!h.require(projected == coproduct(rsk_insertion(sigma)), [&] {
            return "coproduct projection fails at " + to_text(sigma);
          })) {
        return;
      }
    }
  }
}

void suite_monoid(Harness& h, int nmax, PosetBank&) {
  // permutations: associativity and units, all triples with total <= nmax
  for (int p = 0; p <= nmax; ++p) {
    for (int q = 0; p + q <= nmax; ++q) {
      for (int r = 0; p + q + r <= nmax; ++r) {
        for (const auto& a : all_permutations(p)) {
          for (const auto& b : all_permutations(q)) {
            for (const auto& c : all_permutations(r)) {
              const bool box_assoc =
                  right_shifted_concat(right_shifted_concat(a, b), c) ==
                  right_shifted_concat(a, right_shifted_concat(b, c));
              const bool tri_assoc =
                  left_shifted_concat(left_shifted_concat(a, b), c) ==
                  left_shifted_concat(a, left_shifted_concat(b, c));
              if (!h.require(box_assoc && tri_assoc, [&] {
                    return "associativity fails at " + to_text(a) + "," +
                           to_text(b) + "," + to_text(c);
                  })) {
                return;
              }
            }
          }
        }
      }
    }
  }
  const Permutation eps;
  for (int n = 0; n <= nmax; ++n) {
    for (const auto& a : all_permutations(n)) {
      if (!h.require(right_shifted_concat(a, eps) == a &&
                         right_shifted_concat(eps, a) == a &&
                         left_shifted_concat(a, eps) == a &&
                         left_shifted_concat(eps, a) == a,
                     [&] { return "unit law fails at " + to_text(a); })) {
        return;
      }
    }
  }
  const StandardTableau empty_tab;
  for (int p = 0; p <= nmax; ++p) {
    for (int q = 0; p + q <= nmax; ++q) {
      for (int r = 0; p + q + r <= nmax && p + q + r <= 6; ++r) {
        for (const auto& a : enumerate_tableaux(p)) {
          for (const auto& b : enumerate_tableaux(q)) {
            for (const auto& c : enumerate_tableaux(r)) {
              const bool box_assoc =
                  right_shifted_concat(right_shifted_concat(a, b), c) ==
                  right_shifted_concat(a, right_shifted_concat(b, c));
              const bool tri_assoc =
                  left_shifted_concat(left_shifted_concat(a, b), c) ==
                  left_shifted_concat(a, left_shifted_concat(b, c));
              if (!h.require(box_assoc && tri_assoc, [&] {
                    return "tableau associativity fails at " + to_text(a) +
                           "," + to_text(b) + "," + to_text(c);
                  })) {
                return;
              }
            }
          }
        }
      }
    }
  }
}

void suite_conjugation(Harness& h, int nmax, PosetBank&) {
  for (int p = 0; p <= nmax; ++p) {
    for (int q = 0; p + q <= nmax; ++q) {
      for (const auto& u : all_permutations(p)) {
        for (const auto& v : all_permutations(q)) {
          const auto direct = left_shifted_concat(v, u);
          const auto conjugated =
              reversed(right_shifted_concat(reversed(u), reversed(v)));
          if (!h.require(direct == conjugated, [&] {
                return "conjugation fails at v=" + to_text(v) +
                       " u=" + to_text(u);
              })) {
            return;
          }
        }
      }
    }
  }
  // a few random large pairs
  std::mt19937 rng(777u);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> size_dist(0, 12);
    auto random_perm = [&](int n) {
      std::vector<int> a(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = i + 1;
      std::shuffle(a.begin(), a.end(), rng);
      return Permutation(std::move(a));
    };
    const auto u = random_perm(size_dist(rng));
    const auto v = random_perm(size_dist(rng));
    const auto direct = left_shifted_concat(v, u);
    const auto conjugated =
        reversed(right_shifted_concat(reversed(u), reversed(v)));
    if (!h.require(direct == conjugated, [&] {
          return "conjugation fails at v=" + to_text(v) + " u=" + to_text(u);
        })) {
      return;
    }
  }
}

void suite_factorize(Harness& h, int nmax, PosetBank&) {
  for (int n = 1; n <= nmax; ++n) {
    for (const auto& sigma : all_permutations(n)) {
      const auto factors = indecomposable_factors(sigma);
      bool ok = fold_left(factors) == sigma && !factors.empty();
      for (const auto& f : factors) ok = ok && is_indecomposable(f);
      // boundaries line up with the global descents
      std::vector<int> boundaries;
      int acc = 0;
      for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        acc += factors[i].size();
        boundaries.push_back(acc);
      }
      ok = ok && boundaries == global_descents(sigma);
      if (!h.require(ok, [&] {
            return "factorization fails at " + to_text(sigma);
          })) {
        return;
      }
    }
  }
  for (int n = 1; n <= std::min(nmax, 8); ++n) {
    for (const auto& t : enumerate_tableaux(n)) {
      const auto factors = indecomposable_factors(t);
      bool ok = fold_left(factors) == t && !factors.empty();
      for (const auto& f : factors) ok = ok && is_indecomposable(f);
      if (!h.require(ok, [&] {
            return "tableau factorization fails at " + to_text(t);
          })) {
        return;
      }
    }
  }
}

void suite_repr_indep(Harness& h, int nmax, PosetBank&) {
  for (int p = 0; p <= nmax; ++p) {
    for (int q = 0; p + q <= nmax; ++q) {
      for (const auto& a : enumerate_tableaux(p)) {
        for (const auto& b : enumerate_tableaux(q)) {
          const auto reps_a = plactic_class(a);
          const auto reps_b = plactic_class(b);
          std::set<StandardTableau> tri, box;
          for (const auto& u : reps_a) {
            for (const auto& v : reps_b) {
              tri.insert(rsk_insertion(left_shifted_concat(v, u)));
              box.insert(rsk_insertion(right_shifted_concat(u, v)));
            }
          }
          if (!h.require(tri.size() <= 1 && box.size() <= 1, [&] {
                return "products depend on representatives at " + to_text(a) +
                       ", " + to_text(b);
              })) {
            return;
          }
        }
      }
    }
  }
  for (int n = 0; n <= nmax; ++n) {
    for (const auto& t : enumerate_tableaux(n)) {
      const auto reps = plactic_class(t);
      for (int lo = 1; lo <= n; ++lo) {
        for (int hi = lo; hi <= n; ++hi) {
          std::set<StandardTableau> images;
          for (const auto& u : reps) {
            images.insert(
                rsk_insertion(standardize(restrict_to(u.word(), lo, hi))));
          }
          if (!h.require(images.size() == 1, [&] {
                return "restriction depends on representatives at " +
                       to_text(t) + " I=[" + std::to_string(lo) + "," +
                       std::to_string(hi) + "]";
            })) {
            return;
          }
        }
      }
    }
  }
}

void suite_primitive_dim(Harness& h, int nmax, PosetBank& bank) {
  for (int n = 1; n <= nmax; ++n) {
    const auto tabs = enumerate_tableaux(n);
    // kernel of the reduced coproduct on the rank-n component
    std::map<std::pair<StandardTableau, StandardTableau>, std::size_t> columns;
    std::vector<std::vector<Int>> matrix;
    for (const auto& t : tabs) {
      std::vector<Int> row;
      for (const auto& [key, c] : coproduct(t).terms()) {
        if (key.first.empty() || key.second.empty()) continue;
        auto [it, inserted] = columns.emplace(key, columns.size());
        (void)inserted;
        if (it->second >= row.size()) row.resize(it->second + 1);
        row[it->second] += c;
      }
      matrix.push_back(std::move(row));
    }
    for (auto& row : matrix) row.resize(columns.size());
    const long long kernel_dim =
        static_cast<long long>(tabs.size()) - int_matrix_rank(matrix);
    if (!h.require(kernel_dim == count_indecomposable(n), [&] {
          return "primitive dimension mismatch at n=" + std::to_string(n);
        })) {
      return;
    }
    // the M-elements of indecomposables are primitive, the others are not
    const auto& poset = bank.taskin(n);
    for (const auto& t : tabs) {
      const bool expected = is_indecomposable(t);
      const auto element =
          from_monomial(MonomialCoords<StandardTableau>::unit(t), poset);
      if (!h.require(is_primitive(element) == expected, [&] {
            return "primitivity of M differs from indecomposability at " +
                   to_text(t);
          })) {
        return;
      }
    }
  }
}

using SuiteFn = std::function<void(Harness&, int, PosetBank&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"order-axioms", suite_order_axioms},
      {"covers", suite_covers},
      {"lemma1", suite_lemma1},
      {"lemma2", suite_lemma2},
      {"lemma3", suite_lemma3},
      {"lemma4", suite_lemma4},
      {"lemma5", suite_lemma5},
      {"lemma6", suite_lemma6},
      {"lemma7", suite_lemma7},
      {"thm1", suite_thm1},
      {"thm3", suite_thm3},
      {"loday-ronco", suite_loday_ronco},
      {"taskin", suite_taskin},
      {"duality", suite_duality},
      {"rsk", suite_rsk},
      {"knuth", suite_knuth},
      {"insertion-hom", suite_insertion_hom},
      {"mobius", suite_mobius},
      {"mbasis", suite_mbasis},
      {"coassoc", suite_coassoc},
      {"counit", suite_counit},
      {"bialgebra", suite_bialgebra},
      {"monoid", suite_monoid},
      {"conjugation", suite_conjugation},
      {"factorize", suite_factorize},
      {"repr-indep", suite_repr_indep},
      {"primitive-dim", suite_primitive_dim},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  for (const auto& [candidate, fn] : suite_table()) {
    if (candidate == name) return true;
  }
  return false;
}

SuiteResult run_suite(const std::string& name, int nmax, PosetBank& bank) {
  for (const auto& [candidate, fn] : suite_table()) {
    if (candidate != name) continue;
    Harness h;
    h.result.name = name;
    h.result.nmax = nmax;
    const auto start = std::chrono::steady_clock::now();
    fn(h, nmax, bank);
    h.result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return h.result;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

long long int_matrix_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  Int prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return static_cast<long long>(rank);
}

}  // namespace fsym
