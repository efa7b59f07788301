#include <doctest.h>

#include "peakalg/descent_bases.hpp"

using namespace peakalg;

TEST_CASE("Y_J supports partition the group, n <= 6") {
  for (CoxeterType t : {CoxeterType::A, CoxeterType::B, CoxeterType::D})
    for (int n = (t == CoxeterType::D ? 2 : 1); n <= 6; ++n) {
      const Group& g = Group::get(t, n);
      std::vector<int> hits(g.key_space(), 0);
      for (const auto& j : all_generator_sets(t, n)) {
        const AlgElem y = y_basis(t, n, j);
        for (const auto& term : y.terms()) {
          CHECK(term.coeff == 1);
          ++hits[term.key];
        }
      }
      for (const auto& w : g.elements()) CHECK(hits[g.key(w)] == 1);
    }
}

TEST_CASE("X and Y are inverse changes of basis, n <= 5") {
  for (CoxeterType t : {CoxeterType::A, CoxeterType::B, CoxeterType::D})
    for (int n = (t == CoxeterType::D ? 2 : 1); n <= 5; ++n)
      for (const auto& j : all_generator_sets(t, n)) CHECK(y_from_x(t, n, j) == y_basis(t, n, j));
}

TEST_CASE("Y structure constants are non-negative integers, n <= 4") {
  for (CoxeterType t : {CoxeterType::A, CoxeterType::B, CoxeterType::D})
    for (int n = (t == CoxeterType::D ? 2 : 1); n <= 4; ++n) {
      const auto table = structure_constants(t, n, DescentKind::Y);
      CHECK(table.all_nonnegative_integers());
      CHECK(table.dim() == (std::size_t{1} << (t == CoxeterType::A ? n - 1 : n)));
    }
}

TEST_CASE("compositions and pseudo compositions") {
  using codec::from_composition;
  using codec::to_composition;
  CHECK(to_composition(GeneratorSet::of(CoxeterType::A, 5, {2, 3})) == std::vector{2, 1, 2});
  CHECK(from_composition(CoxeterType::A, {2, 1, 2}).mask() == 0b1100);
  // Type B: 0 ∈ J iff a_0 = 0.
  CHECK(to_composition(GeneratorSet::of(CoxeterType::B, 3, {0, 2})) == std::vector{0, 2, 1});
  CHECK(to_composition(GeneratorSet::of(CoxeterType::B, 3, {})) == std::vector{3});
  CHECK(from_composition(CoxeterType::B, {1, 2}).mask() == 0b10);
  CHECK_THROWS(from_composition(CoxeterType::A, {0, 2}));
  CHECK(codec::complement(CoxeterType::A, {1, 1, 2}) == std::vector{3, 1});
  CHECK(codec::refines(CoxeterType::A, {1, 1, 2}, {2, 2}));
  CHECK(codec::parse("(2,1)") == std::vector{2, 1});
}

TEST_CASE("Y-coordinates of Y_{1}·Y_{2} in S_3 count four products") {
  // Y_J are disjoint class sums, so Σ_K c_K·#Y_K counts the #Y_{1}·#Y_{2} = 4 products.
  const AlgElem y1 = y_basis(CoxeterType::A, 3, GeneratorSet::of(CoxeterType::A, 3, {1}));
  const AlgElem y2 = y_basis(CoxeterType::A, 3, GeneratorSet::of(CoxeterType::A, 3, {2}));
  const auto& basis = descent_basis(CoxeterType::A, 3, DescentKind::Y);
  const auto c = express_in_span(internal_product(y1, y2), basis);
  REQUIRE(c.has_value());
  Rational total = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) total += c->coords[k] * Rational(basis[k].support_size());
  CHECK(total == 4);
}
