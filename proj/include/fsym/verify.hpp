#pragma once

#include <string>
#include <vector>

#include "fsym/poset.hpp"

namespace fsym {

struct SuiteResult {
  std::string name;
  int nmax = 0;
  bool pass = true;
  long long checks = 0;
  std::string counterexample;  // first failure, empty on pass
  double seconds = 0.0;
};

/// Names of all invariant suites, in the order `all` runs them.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

/// Runs one named suite exhaustively up to the given bound. For suites over
/// a single rank the bound caps the rank; for suites over operand pairs it
/// caps the total rank of the pair. Posets are pulled from (and cached in)
/// the bank.
SuiteResult run_suite(const std::string& name, int nmax, PosetBank& bank);

/// Exact rank of an integer matrix (fraction-free elimination).
long long int_matrix_rank(std::vector<std::vector<Int>> m);

}  // namespace fsym
