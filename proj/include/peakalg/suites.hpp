#pragma once

// Named verification suites over ranks 1..n_max, run on a worker pool.

#include <string>
#include <vector>

#include "peakalg/report.hpp"

namespace peakalg {

struct SuiteOptions {
  int n_max = 4;
  bool deep = false;  // n = 5 principal ideals, full Ω products at n = 4, sbexact at n_max + 1
  int jobs = 1;
};

/// all, descents, peaks, chi, phi, psi, ideals, exactseq, commutative, mr, theta, hopf, words.
const std::vector<std::string>& suite_names();

/// Combinatorial descent sets against Cayley-graph length descents for types A, B, D.
void verify_descent_oracle(int n, VerifyReport& report);

/// Throws std::invalid_argument for an unknown suite or n_max outside 1..6.
/// The result is canonicalized, so it does not depend on the number of jobs.
VerifyReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace peakalg
