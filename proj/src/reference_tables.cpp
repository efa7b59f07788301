#include "peakalg/reference_tables.hpp"

#include <stdexcept>

namespace peakalg {

const ReferenceTable& reference_peak_table(int n) {
  static const std::vector<ReferenceTable> tables{
      {"P_2", {"P{}", "P{1}"}, {{"(1,0)", "(0,1)"}, {"(0,1)", "(1,0)"}}},
      {"P_3",
       {"P{}", "P{1}", "P{2}"},
       {{"(1,0,0)", "(0,1,0)", "(0,0,1)"}, {"(0,1,0)", "(2,1,2)", "(1,1,1)"}, {"(0,0,1)", "(1,1,1)", "(1,1,0)"}}},
      {"P_4",
       {"P{}", "P{1}", "P{2}", "P{3}", "P{1,3}"},
       {{"(1,0,0,0,0)", "(0,1,0,0,0)", "(0,0,1,0,0)", "(0,0,0,1,0)", "(0,0,0,0,1)"},
        {"(0,1,0,0,0)", "(3,2,2,2,2)", "(2,2,3,2,2)", "(1,1,0,1,2)", "(1,1,2,2,1)"},
        {"(0,0,1,0,0)", "(2,2,2,3,3)", "(3,3,2,3,3)", "(1,1,1,1,1)", "(2,2,2,1,1)"},
        {"(0,0,0,1,0)", "(1,1,1,0,1)", "(1,1,1,1,1)", "(1,0,1,0,0)", "(0,1,0,1,1)"},
        {"(0,0,0,0,1)", "(1,1,2,2,1)", "(2,2,1,2,2)", "(0,1,1,0,0)", "(2,1,1,1,1)"}}},
  };
  if (n < 2 || n > 4) throw std::out_of_range("reference peak tables exist for n = 2, 3, 4");
  return tables[n - 2];
}

const ReferenceTable& reference_whp_table(int n) {
  static const std::vector<ReferenceTable> tables{
      {"whp_2",
       {"p0", "p1", "p°1"},
       {{"(1,0,0)", "(0,1,0)", "(0,0,1)"}, {"(0,1,0)", "(1,0,0)", "(0,0,1)"}, {"(0,0,1)", "(0,0,1)", "(0,0,2)"}}},
      {"whp_3",
       {"p0", "p1", "p°1", "p°2"},
       {{"(1,0,0,0)", "(0,1,0,0)", "(0,0,1,0)", "(0,0,0,1)"},
        {"(0,1,0,0)", "(5,4,0,0)", "(0,0,3,4)", "(0,0,2,1)"},
        {"(0,0,1,0)", "(0,0,3,4)", "(0,0,3,2)", "(0,0,1,2)"},
        {"(0,0,0,1)", "(0,0,2,1)", "(0,0,1,2)", "(0,0,1,0)"}}},
      {"whp_4",
       {"p0", "p1", "p2", "p°1", "p°2"},
       {{"(1,0,0,0,0)", "(0,1,0,0,0)", "(0,0,1,0,0)", "(0,0,0,1,0)", "(0,0,0,0,1)"},
        {"(0,1,0,0,0)", "(15,13,15,0,0)", "(3,4,3,0,0)", "(0,0,0,6,6)", "(0,0,0,12,12)"},
        {"(0,0,1,0,0)", "(3,4,3,0,0)", "(2,1,1,0,0)", "(0,0,0,1,2)", "(0,0,0,4,3)"},
        {"(0,0,0,1,0)", "(0,0,0,6,6)", "(0,0,0,1,2)", "(0,0,0,4,2)", "(0,0,0,4,6)"},
        {"(0,0,0,0,1)", "(0,0,0,12,12)", "(0,0,0,4,3)", "(0,0,0,4,6)", "(0,0,0,12,10)"}}},
  };
  if (n < 2 || n > 4) throw std::out_of_range("reference ŵ℘ tables exist for n = 2, 3, 4");
  return tables[n - 2];
}

Outcome compare_with_reference(const StructureTable& computed, const ReferenceTable& ref) {
  if (computed.labels() != ref.labels) return Outcome::fail(ref.name + ": basis labels differ");
  for (std::size_t i = 0; i < ref.cells.size(); ++i)
    for (std::size_t j = 0; j < ref.cells[i].size(); ++j) {
      const std::string got = tuple_text(computed.cell(i, j));
      if (got != ref.cells[i][j])
        return Outcome::fail(ref.name + " cell " + ref.labels[i] + "·" + ref.labels[j] + " is " + got + ", expected " +
                             ref.cells[i][j]);
    }
  return Outcome::pass();
}

const std::vector<std::pair<std::string, int>>& reference_phi_x2_square() {
  static const std::vector<std::pair<std::string, int>> coords{{"X{2}", 2}, {"X{3}", 4}, {"X{0,3}", -2}, {"X{1,3}", 14}};
  return coords;
}

}  // namespace peakalg
