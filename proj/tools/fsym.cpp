#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "fsym/format.hpp"
#include "fsym/hopf.hpp"
#include "fsym/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitGuard = 3;

constexpr int kPosetRankLimit = 7;        // poset-backed computations
constexpr int kEnumerationRankLimit = 10; // enumeration-only computations

struct GuardRefusal {
  std::string message;
};

void guard_rank(int n, int limit, bool force, const std::string& what) {
  if (n > limit && !force) {
    throw GuardRefusal{what + " at rank " + std::to_string(n) +
                       " exceeds the guard (" + std::to_string(limit) +
                       "); pass --force to override"};
  }
}

bool looks_like_tableau(const std::string& text) {
  return text.find('/') != std::string::npos;
}

using fsym::LinComb;
using fsym::MonomialCoords;
using fsym::Permutation;
using fsym::PosetBank;
using fsym::StandardTableau;
using fsym::TensorComb;

struct Options {
  bool json = false;
  bool french = false;
  bool force = false;
};

void print_tableau_pair(const fsym::RskPair& pair, const Options& opt) {
  if (opt.json) {
    nlohmann::json j{{"P", fsym::to_json(pair.p)}, {"Q", fsym::to_json(pair.q)}};
    std::cout << j.dump() << '\n';
    return;
  }
  std::cout << "P = " << fsym::to_text(pair.p) << '\n'
            << fsym::render_grid(pair.p, opt.french) << "Q = "
            << fsym::to_text(pair.q) << '\n'
            << fsym::render_grid(pair.q, opt.french);
}

int run(int argc, char** argv) {
  CLI::App app{"exact computations in the Hopf algebras of permutations and "
               "standard Young tableaux"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_flag("--french", opt.french,
               "render tableaux with row 1 at the bottom");
  app.add_flag("--force", opt.force, "override rank guard rails");

  PosetBank bank;

  // rsk <perm>
  std::string rsk_arg;
  auto* rsk_cmd = app.add_subcommand("rsk", "insertion and recording tableaux");
  rsk_cmd->add_option("perm", rsk_arg, "permutation")->required();

  // class <tableau>
  std::string class_arg;
  auto* class_cmd =
      app.add_subcommand("class", "list the plactic class of a tableau");
  class_cmd->add_option("tableau", class_arg, "tableau")->required();

  // product [--star|--box|--triangle|--shuffle] <x> <y>
  std::string prod_x, prod_y;
  bool flag_star = false, flag_box = false, flag_triangle = false,
       flag_shuffle = false, prod_tableaux = false;
  auto* prod_cmd = app.add_subcommand("product", "product of two elements");
  prod_cmd->add_flag("--star", flag_star, "Hopf product (default)");
  prod_cmd->add_flag("--box", flag_box, "right shifted concatenation");
  prod_cmd->add_flag("--triangle", flag_triangle, "left shifted concatenation");
  prod_cmd->add_flag("--shuffle", flag_shuffle, "shifted shuffle");
  prod_cmd->add_flag("--tableaux", prod_tableaux,
                     "parse operands as tableaux even without '/'");
  prod_cmd->add_option("x", prod_x, "left operand")->required();
  prod_cmd->add_option("y", prod_y, "right operand")->required();

  // coproduct <perm|tableau>
  std::string coprod_arg;
  bool coprod_tableaux = false;
  auto* coprod_cmd = app.add_subcommand("coproduct", "tensor expansion");
  coprod_cmd->add_flag("--tableaux", coprod_tableaux,
                       "parse the operand as a tableau even without '/'");
  coprod_cmd->add_option("x", coprod_arg, "element")->required();

  // mobius <n> [--tableaux] <x> <y>
  int mobius_n = 0;
  bool mobius_tableaux = false;
  std::string mobius_x, mobius_y;
  auto* mobius_cmd =
      app.add_subcommand("mobius", "Moebius function value in a weak order");
  mobius_cmd->add_option("n", mobius_n, "rank")->required();
  mobius_cmd->add_flag("--tableaux", mobius_tableaux, "use the tableau poset");
  mobius_cmd->add_option("x", mobius_x, "lower element")->required();
  mobius_cmd->add_option("y", mobius_y, "upper element")->required();

  // mbasis <perm|tableau>
  std::string mbasis_arg;
  bool mbasis_tableaux = false;
  auto* mbasis_cmd = app.add_subcommand(
      "mbasis", "monomial basis element expanded in the fundamental basis");
  mbasis_cmd->add_flag("--tableaux", mbasis_tableaux,
                       "parse the operand as a tableau even without '/'");
  mbasis_cmd->add_option("x", mbasis_arg, "element")->required();

  // primitives <n>
  int primitives_n = 0;
  auto* primitives_cmd = app.add_subcommand(
      "primitives", "indecomposable tableaux (indices of primitive "
                    "monomial elements)");
  primitives_cmd->add_option("n", primitives_n, "rank")->required();

  // count-indec <nmax>
  int count_nmax = 0;
  auto* count_cmd = app.add_subcommand(
      "count-indec", "counts of indecomposable tableaux for ranks 1..nmax");
  count_cmd->add_option("nmax", count_nmax, "largest rank")->required();

  // saliola
  auto* saliola_cmd = app.add_subcommand(
      "saliola",
      "monomial structure constants of M(123) * M(123) in rank 6");

  // verify <suite> --nmax <n>
  std::string verify_suite;
  int verify_nmax = 5;
  auto* verify_cmd =
      app.add_subcommand("verify", "run a named invariant suite");
  verify_cmd->add_option("suite", verify_suite, "suite name or 'all'")
      ->required();
  verify_cmd->add_option("--nmax", verify_nmax, "exhaustive rank bound");

  // poset <n> [--tableaux] --export <path>
  int poset_n = 0;
  bool poset_tableaux = false;
  std::string poset_path;
  auto* poset_cmd = app.add_subcommand("poset", "export cover edge list");
  poset_cmd->add_option("n", poset_n, "rank")->required();
  poset_cmd->add_flag("--tableaux", poset_tableaux, "use the tableau poset");
  poset_cmd->add_option("--export", poset_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitUsage;
  }

  if (rsk_cmd->parsed()) {
    print_tableau_pair(fsym::rsk(fsym::parse_permutation(rsk_arg)), opt);
    return kExitOk;
  }

  if (class_cmd->parsed()) {
    const auto t = fsym::parse_tableau(class_arg);
    guard_rank(t.size(), kEnumerationRankLimit, opt.force, "class listing");
    const auto reps = fsym::plactic_class(t);
    if (opt.json) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& sigma : reps) j.push_back(fsym::to_text(sigma));
      std::cout << j.dump() << '\n';
    } else {
      for (const auto& sigma : reps) std::cout << fsym::to_text(sigma) << '\n';
    }
    return kExitOk;
  }

  if (prod_cmd->parsed()) {
    const int mode_count = static_cast<int>(flag_star) + flag_box +
                           flag_triangle + flag_shuffle;
    if (mode_count > 1) {
      std::cerr << "choose at most one of --star --box --triangle --shuffle\n";
      return kExitUsage;
    }
    const bool tableaux =
        prod_tableaux || looks_like_tableau(prod_x) || looks_like_tableau(prod_y);
    if (tableaux) {
      const auto a = fsym::parse_tableau(prod_x);
      const auto b = fsym::parse_tableau(prod_y);
      if (flag_box) {
        const auto r = right_shifted_concat(a, b);
        std::cout << (opt.json ? fsym::to_json(r).dump() : fsym::to_text(r))
                  << '\n';
      } else if (flag_triangle) {
        const auto r = left_shifted_concat(a, b);
        std::cout << (opt.json ? fsym::to_json(r).dump() : fsym::to_text(r))
                  << '\n';
      } else if (flag_shuffle) {
        guard_rank(a.size() + b.size(), kPosetRankLimit, opt.force,
                   "tableau shuffle");
        const auto r = shifted_shuffle(a, b, bank.taskin(a.size() + b.size()));
        std::cout << (opt.json ? fsym::to_json(r).dump() : fsym::to_text(r))
                  << '\n';
      } else {
        guard_rank(a.size() + b.size(), kEnumerationRankLimit, opt.force,
                   "tableau product");
        const auto r = hopf_product(a, b);
        std::cout << (opt.json ? fsym::to_json(r).dump() : fsym::to_text(r))
                  << '\n';
      }
    } else {
      const auto a = fsym::parse_permutation(prod_x);
      const auto b = fsym::parse_permutation(prod_y);
      if (flag_box) {
        const auto r = right_shifted_concat(a, b);
        std::cout << (opt.json ? fsym::to_json(r).dump() : fsym::to_text(r))
                  << '\n';
      } else if (flag_triangle) {
        const auto r = left_shifted_concat(a, b);
        std::cout << (opt.json ? fsym::to_json(r).dump() : fsym::to_text(r))
                  << '\n';
      } else {
        guard_rank(a.size() + b.size(), kEnumerationRankLimit, opt.force,
                   "permutation product");
        const auto r =
            flag_shuffle ? shifted_shuffle(a, b) : hopf_product(a, b);
        std::cout << (opt.json ? fsym::to_json(r).dump() : fsym::to_text(r))
                  << '\n';
      }
    }
    return kExitOk;
  }

  if (coprod_cmd->parsed()) {
    if (coprod_tableaux || looks_like_tableau(coprod_arg)) {
      const auto r = fsym::coproduct(fsym::parse_tableau(coprod_arg));
      std::cout << (opt.json ? fsym::to_json(r).dump() : fsym::to_text(r))
                << '\n';
    } else {
      const auto r = fsym::coproduct(fsym::parse_permutation(coprod_arg));
      std::cout << (opt.json ? fsym::to_json(r).dump() : fsym::to_text(r))
                << '\n';
    }
    return kExitOk;
  }

  if (mobius_cmd->parsed()) {
    guard_rank(mobius_n, kPosetRankLimit, opt.force, "poset construction");
    fsym::Int value;
    if (mobius_tableaux) {
      value = bank.taskin(mobius_n)
                  .mobius(fsym::parse_tableau(mobius_x),
                          fsym::parse_tableau(mobius_y));
    } else {
      value = bank.weak(mobius_n)
                  .mobius(fsym::parse_permutation(mobius_x),
                          fsym::parse_permutation(mobius_y));
    }
    if (opt.json) {
      std::cout << nlohmann::json{{"mobius", value.str()}}.dump() << '\n';
    } else {
      std::cout << value << '\n';
    }
    return kExitOk;
  }

  if (mbasis_cmd->parsed()) {
    if (mbasis_tableaux || looks_like_tableau(mbasis_arg)) {
      const auto t = fsym::parse_tableau(mbasis_arg);
      guard_rank(t.size(), kPosetRankLimit, opt.force, "poset construction");
      const auto r = fsym::from_monomial(
          MonomialCoords<StandardTableau>::unit(t), bank.taskin(t.size()));
      std::cout << (opt.json ? fsym::to_json(r).dump() : fsym::to_text(r))
                << '\n';
    } else {
      const auto p = fsym::parse_permutation(mbasis_arg);
      guard_rank(p.size(), kPosetRankLimit, opt.force, "poset construction");
      const auto r = fsym::from_monomial(MonomialCoords<Permutation>::unit(p),
                                         bank.weak(p.size()));
      std::cout << (opt.json ? fsym::to_json(r).dump() : fsym::to_text(r))
                << '\n';
    }
    return kExitOk;
  }

  if (primitives_cmd->parsed()) {
    guard_rank(primitives_n, kEnumerationRankLimit, opt.force,
               "tableau enumeration");
    const auto basis = fsym::primitive_basis(primitives_n);
    if (opt.json) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& t : basis) j.push_back(fsym::to_text(t));
      std::cout << j.dump() << '\n';
    } else {
      for (const auto& t : basis) std::cout << fsym::to_text(t) << '\n';
    }
    return kExitOk;
  }

  if (count_cmd->parsed()) {
    guard_rank(count_nmax, kEnumerationRankLimit, opt.force,
               "tableau enumeration");
    std::vector<long long> counts;
    for (int n = 1; n <= count_nmax; ++n) {
      counts.push_back(fsym::count_indecomposable(n));
    }
    if (opt.json) {
      std::cout << nlohmann::json(counts).dump() << '\n';
    } else {
      for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << counts[i];
      }
      std::cout << '\n';
    }
    return kExitOk;
  }

  if (saliola_cmd->parsed()) {
    const StandardTableau row3 = fsym::rsk_insertion(
        fsym::parse_permutation("123"));
    const auto result = fsym::monomial_product(row3, row3, bank);
    if (opt.json) {
      std::cout << fsym::to_json(result).dump() << '\n';
      return kExitOk;
    }
    // print in the order of the published computation: the all-ones term,
    // then by coefficient blocks
    const char* published_words[] = {"123456", "241356", "251346", "261345",
                                     "351246", "361245", "461235", "256134",
                                     "346125", "356124", "456123", "362514",
                                     "462513", "543126"};
    fsym::LinComb<StandardTableau> remaining = result.coords;
    std::string out;
    for (const char* word : published_words) {
      const auto key =
          fsym::rsk_insertion(fsym::parse_permutation(word));
      const fsym::Int c = remaining.coefficient(key);
      if (c == 0) continue;
      remaining.add(key, -c);
      const bool negative = c < 0;
      if (out.empty()) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      out += fsym::Int(boost::multiprecision::abs(c)).str() + "*M(" +
             fsym::to_text(key) + ")";
    }
    // any terms beyond the published list come last (there should be none)
    for (const auto& [key, c] : remaining.terms()) {
      const bool negative = c < 0;
      if (out.empty()) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      out += fsym::Int(boost::multiprecision::abs(c)).str() + "*M(" +
             fsym::to_text(key) + ")";
    }
    std::cout << "M(123) * M(123) = " << out << '\n';
    return kExitOk;
  }

  if (verify_cmd->parsed()) {
    guard_rank(verify_nmax, kPosetRankLimit, opt.force, "verification");
    std::vector<std::string> names;
    if (verify_suite == "all") {
      names = fsym::suite_names();
    } else if (fsym::is_suite(verify_suite)) {
      names.push_back(verify_suite);
    } else {
      std::cerr << "unknown suite '" << verify_suite << "'; available:";
      for (const auto& name : fsym::suite_names()) std::cerr << ' ' << name;
      std::cerr << " all\n";
      return kExitUsage;
    }
    bool all_pass = true;
    nlohmann::json report = nlohmann::json::array();
    for (const auto& name : names) {
      const auto result = fsym::run_suite(name, verify_nmax, bank);
      all_pass = all_pass && result.pass;
      if (opt.json) {
        report.push_back({{"suite", result.name},
                          {"nmax", result.nmax},
                          {"pass", result.pass},
                          {"checks", result.checks},
                          {"counterexample", result.counterexample}});
      } else {
        std::cout << (result.pass ? "[PASS] " : "[FAIL] ") << result.name
                  << " (nmax=" << result.nmax << ", " << result.checks
                  << " checks";
        if (result.pass) {
          std::cout << ")\n";
        } else {
          std::cout << ") counterexample: " << result.counterexample << '\n';
        }
      }
    }
    if (opt.json) std::cout << report.dump() << '\n';
    return all_pass ? kExitOk : kExitVerifyFail;
  }

  if (poset_cmd->parsed()) {
    guard_rank(poset_n, kPosetRankLimit, opt.force, "poset construction");
    std::string text;
    std::size_t elements = 0, covers = 0;
    if (poset_tableaux) {
      const auto& poset = bank.taskin(poset_n);
      text = fsym::export_covers(poset);
      elements = static_cast<std::size_t>(poset.size());
      covers = poset.cover_pairs().size();
    } else {
      const auto& poset = bank.weak(poset_n);
      text = fsym::export_covers(poset);
      elements = static_cast<std::size_t>(poset.size());
      covers = poset.cover_pairs().size();
    }
    std::ofstream out(poset_path);
    if (!out) {
      std::cerr << "cannot write " << poset_path << '\n';
      return kExitUsage;
    }
    out << text;
    if (opt.json) {
      std::cout << nlohmann::json{{"elements", elements}, {"covers", covers}}
                       .dump()
                << '\n';
    } else {
      std::cout << elements << " elements, " << covers << " covers -> "
                << poset_path << '\n';
    }
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const GuardRefusal& refusal) {
    std::cerr << refusal.message << '\n';
    return kExitGuard;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitUsage;
  }
}
