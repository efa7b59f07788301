#include <doctest.h>

#include "peakalg/peak_algebra.hpp"
#include "peakalg/reference_tables.hpp"
#include "peakalg/suites.hpp"
#include "test_util.hpp"

using namespace peakalg;

TEST_CASE("suite output does not depend on the number of jobs") {
  for (const std::string name : {"descents", "peaks", "theta"}) {
    const VerifyReport one = run_suite(name, {4, false, 1});
    const VerifyReport three = run_suite(name, {4, false, 3});
    require_all_pass(one);
    CHECK(one.to_json() == three.to_json());
  }
}

TEST_CASE("suite argument validation") {
  CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("peaks", {7, false, 1}), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("peaks", {3, false, 0}), std::invalid_argument);
  CHECK(suite_names().front() == "all");
}

TEST_CASE("a perturbed reference table is detected") {
  ReferenceTable ref = reference_peak_table(3);
  CHECK(compare_with_reference(peak_table(3), ref).ok);
  ref.cells[1][1] = "(9,9,9)";
  const Outcome o = compare_with_reference(peak_table(3), ref);
  CHECK_FALSE(o.ok);
  CHECK(o.detail.find("(9,9,9)") != std::string::npos);
}

TEST_CASE("failing checks are reported, not thrown") {
  VerifyReport r("x");
  r.check("b.fails", [] { return Outcome::fail("witness"); });
  r.check("a.throws", []() -> Outcome { throw std::runtime_error("boom"); });
  r.check("c.ok", [] { return Outcome::pass(); });
  CHECK(r.failures() == 2);
  r.canonicalize();
  CHECK(r.first_failure()->id == "a.throws");
  CHECK(r.first_failure()->witness.find("boom") != std::string::npos);
}
