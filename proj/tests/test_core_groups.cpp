#include <doctest.h>

#include <set>

#include "peakalg/core_groups.hpp"
#include "peakalg/errors.hpp"

using namespace peakalg;

TEST_CASE("descent sets agree with Cayley-graph length descents for n <= 6") {
  for (CoxeterType t : {CoxeterType::A, CoxeterType::B, CoxeterType::D})
    for (int n = (t == CoxeterType::D ? 2 : 1); n <= 6; ++n) {
      const LengthTable lengths(t, n);
      const auto elems = enumerate(t, n);
      REQUIRE(lengths.size() == elems.size());
      for (const auto& w : elems) CHECK(descent_set(w, t) == lengths.length_descents(w));
    }
}

TEST_CASE("group orders") {
  CHECK(enumerate(CoxeterType::A, 5).size() == 120);
  CHECK(enumerate(CoxeterType::B, 4).size() == 384);
  CHECK(enumerate(CoxeterType::D, 4).size() == 192);
  CHECK(group_order(CoxeterType::B, 6) == 46080);
}

TEST_CASE("every peak set is sparse and every sparse set occurs, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::uint32_t> seen, seen_interior;
    for (const auto& u : enumerate(CoxeterType::A, n)) {
      const PeakIndex f = peak_set(u);
      CHECK(PeakIndex::is_sparse(f.mask()));
      seen.insert(f.mask());
      seen_interior.insert(interior_peak_set(u).mask());
    }
    CHECK(seen.size() == all_peak_sets(n).size());
    CHECK(seen_interior.size() == all_peak_sets(n, true).size());
  }
}

TEST_CASE("peak set counts follow the Fibonacci recursion up to n = 20") {
  std::uint64_t a = 1, b = 1;  // f_0, f_1
  for (int n = 1; n <= 20; ++n) {
    CHECK(all_peak_sets(n).size() == b);
    CHECK(all_peak_sets(n, true).size() == a);
    CHECK(fibonacci(n) == b);
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
}

TEST_CASE("composition is associative on B_n, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const auto elems = enumerate(CoxeterType::B, n);
    for (const auto& u : elems)
      for (const auto& v : elems)
        for (const auto& w : elems) CHECK(compose(compose(u, v), w) == compose(u, compose(v, w)));
  }
}

TEST_CASE("composition rule (uv)_i = sgn(v_i) u_|v_i|") {
  const SignedPerm u{2, -1, 3};
  const SignedPerm v{-3, 1, 2};
  CHECK(compose(u, v) == SignedPerm{-3, 2, -1});
  CHECK(compose(u, u.inverse()) == SignedPerm::identity(3));
}

TEST_CASE("chi_element only changes signs") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : enumerate(CoxeterType::B, n)) {
      CHECK(forget_signs(chi_element(w)) == forget_signs(w));
      CHECK(chi_element(w).in_group(CoxeterType::D));
    }
}

TEST_CASE("peak sets on small examples") {
  // w_0 = 0, so a peak may sit at position 1.
  CHECK(peak_set(SignedPerm{2, 1, 3}).to_string() == "{1}");
  CHECK(interior_peak_set(SignedPerm{2, 1, 3}).mask() == 0);
  CHECK(peak_set(SignedPerm{1, 3, 2, 4}).to_string() == "{2}");
  CHECK(lambda(GeneratorSet::of(CoxeterType::A, 5, {1, 2, 4})).to_string() == "{1,4}");
}

TEST_CASE("generator sets round-trip through text") {
  const auto d = GeneratorSet::parse(CoxeterType::D, 4, "{1',1,3}");
  CHECK(d.to_string() == "{1',1,3}");
  CHECK(GeneratorSet::parse(CoxeterType::B, 3, "{0,2}").mask() == 0b101);
  CHECK_THROWS(GeneratorSet::parse(CoxeterType::A, 3, "{0}"));
}

TEST_CASE("invalid permutations are rejected") {
  CHECK_THROWS_AS(SignedPerm({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPerm({0, 2}), std::invalid_argument);
  CHECK(SignedPerm::parse("2,-1,3") == SignedPerm{2, -1, 3});
}

TEST_CASE("enumeration caps") {
  CHECK(EnumerationCaps::parse("A=8,B=6,D=6").b == 6);
  CHECK(EnumerationCaps::parse("5").a == 5);
  EnumerationCaps small = EnumerationCaps::parse("3");
  CHECK_THROWS_AS(enumerate(CoxeterType::B, 4, small), CapExceeded);
}
