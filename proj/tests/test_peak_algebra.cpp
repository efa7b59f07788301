#include <doctest.h>

#include <bit>

#include "peakalg/descent_bases.hpp"
#include "peakalg/errors.hpp"
#include "peakalg/peak_algebra.hpp"
#include "peakalg/reference_tables.hpp"
#include "test_util.hpp"

using namespace peakalg;

namespace {

std::uint64_t fib(int n) {
  std::uint64_t a = 1, b = 1;
  for (int i = 1; i < n; ++i) b = std::exchange(a, b) + b;
  return n == 0 ? 1 : b;
}

}  // namespace

TEST_CASE("P_F and P°_F partition S_n and agree with their Y expansions, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (bool interior : {false, true}) {
      std::vector<int> hits(Group::get(CoxeterType::A, n).key_space(), 0);
      for (const auto& f : all_peak_sets(n, interior)) {
        const AlgElem p = interior ? interior_peak_basis(n, f) : peak_basis(n, f);
        CHECK(p == (interior ? interior_peak_basis_from_y(n, f) : peak_basis_from_y(n, f)));
        for (const auto& t : p.terms()) ++hits[t.key];
      }
      for (const auto& w : Group::get(CoxeterType::A, n).elements()) CHECK(hits[Group::get(CoxeterType::A, n).key(w)] == 1);
    }
}

TEST_CASE("dimensions are Fibonacci numbers, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(peak_algebra_basis(n).dimension() == fib(n));
    CHECK(peak_ideal_basis(n).dimension() == fib(n - 1));
  }
}

TEST_CASE("the peak algebra is not commutative from n = 4 on") {
  CHECK(peak_table(3).commutative());
  CHECK_FALSE(peak_table(4).commutative());
}

TEST_CASE("peak tables for n = 2..4 match the reference tables") {
  for (int n = 2; n <= 4; ++n) {
    const Outcome o = compare_with_reference(peak_table(n), reference_peak_table(n));
    INFO(o.detail);
    CHECK(o.ok);
  }
}

TEST_CASE("forgetting signs on X_{F-1} is triangular in the P basis with diagonal 2^{#F}") {
  for (int n = 1; n <= 6; ++n) {
    const auto sets = all_peak_sets(n);
    const Basis& p = peak_algebra_basis(n);
    for (const auto& e : sets) {
      const GeneratorSet shifted(CoxeterType::B, n, e.mask() >> 1);
      const AlgElem img = push_forward(ElementMap::ForgetSigns, x_basis(CoxeterType::B, n, shifted));
      const auto c = express_in_span(img, p);
      REQUIRE(c.has_value());
      for (std::size_t k = 0; k < sets.size(); ++k) {
        const std::uint32_t f = sets[k].mask();
        // Closed form: 2^{#J} on every F ⊆ J ∪ (J+1), J = E-1.
        const std::uint32_t j = shifted.mask();
        const bool covered = (f & ~(j | (j << 1))) == 0;
        CHECK(c->coords[k] == (covered ? Rational(1U << std::popcount(j)) : Rational(0)));
        if (total_order_less(e.mask(), f)) CHECK(c->coords[k] == 0);
      }
    }
  }
}

TEST_CASE("total order on subsets is numeric order of the masks") {
  for (std::uint32_t e = 0; e < 64; ++e)
    for (std::uint32_t f = 0; f < 64; ++f) {
      const bool by_max = e != f && ((e ^ f) & (1U << (31 - std::countl_zero(e ^ f)))) & f;
      CHECK(total_order_less(e, f) == by_max);
    }
}

TEST_CASE("π on the P basis") {
  // π(P_F) = P_{F-2} if 1, 2 ∉ F; -P_{F∖{1}-2} if 1 ∈ F; 0 if 2 ∈ F.
  CHECK(pi_on_basis(5, PeakIndex::of(5, {3})) == peak_basis(3, PeakIndex::of(3, {1})));
  CHECK(pi_on_basis(5, PeakIndex::of(5, {1, 4})) == -peak_basis(3, PeakIndex::of(3, {2})));
  CHECK(pi_on_basis(5, PeakIndex::of(5, {2, 4})).is_zero());
  CHECK(pi_map(peak_basis(4, PeakIndex::of(4, {1, 3}))) == -peak_basis(2, PeakIndex::of(2, {1})));
  CHECK_THROWS_AS(pi_map(AlgElem::single(CoxeterType::A, SignedPerm{2, 1, 3, 4})), DomainError);
}

TEST_CASE("peak theorems, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    VerifyReport r("peaks");
    verify_peak_theorems(n, r);
    require_all_pass(r);
  }
}
