#pragma once

// Reference multiplication tables of 𝒫_2, 𝒫_3, 𝒫_4 and ŵ℘_2, ŵ℘_3, ŵ℘_4, and the
// reference expansion of φ(X_{2})² at n = 5, kept as reference data for the suites.

#include <string>
#include <utility>
#include <vector>

#include "peakalg/descent_bases.hpp"
#include "peakalg/report.hpp"

namespace peakalg {

struct ReferenceTable {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> cells;  // cells[i][j] = "(c_1,..,c_k)" for e_i·e_j
};

/// n in 2..4; throws std::out_of_range otherwise.
const ReferenceTable& reference_peak_table(int n);
const ReferenceTable& reference_whp_table(int n);

/// Cell-by-cell comparison; the first differing cell is the witness.
Outcome compare_with_reference(const StructureTable& computed, const ReferenceTable& ref);

/// Non-zero coordinates of φ(X_{2})² in the basis {φ(X_{F-1})}, by label.
const std::vector<std::pair<std::string, int>>& reference_phi_x2_square();

}  // namespace peakalg
