#include <doctest.h>

#include "peakalg/descent_bases.hpp"
#include "peakalg/group_algebra.hpp"

using namespace peakalg;

namespace {

// Plain convolution straight from the definition, as an oracle for internal_product.
AlgElem naive_product(const AlgElem& a, const AlgElem& b) {
  std::vector<std::pair<Rational, AlgElem>> parts{{Rational(0), AlgElem(a.type(), a.rank())}};
  for (const auto& [u, c] : a.to_pairs())
    for (const auto& [v, d] : b.to_pairs()) parts.emplace_back(c * d, AlgElem::single(a.type(), compose(u, v)));
  return linear_combine(parts);
}

}  // namespace

TEST_CASE("internal product matches the naive convolution") {
  const auto& y = descent_basis(CoxeterType::B, 3, DescentKind::Y);
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) CHECK(internal_product(y[i], y[j]) == naive_product(y[i], y[j]));
  const AlgElem frac = Rational(1, 3) * y[1] - Rational(5, 2) * y[4];
  CHECK(internal_product(frac, y[2]) == naive_product(frac, y[2]));
}

TEST_CASE("internal product is associative and unital on basis triples, n <= 4") {
  for (auto [t, n] : {std::pair{CoxeterType::A, 4}, std::pair{CoxeterType::B, 3}, std::pair{CoxeterType::D, 3}}) {
    const auto& y = descent_basis(t, n, DescentKind::Y);
    const AlgElem one = AlgElem::identity(t, n);
    for (const auto& a : y.elements()) {
      CHECK(internal_product(one, a) == a);
      CHECK(internal_product(a, one) == a);
      for (const auto& b : y.elements()) {
        const AlgElem ab = internal_product(a, b);
        for (const auto& c : y.elements()) CHECK(internal_product(ab, c) == internal_product(a, internal_product(b, c)));
      }
    }
  }
}

TEST_CASE("push forward: forget_signs is multiplicative, sigma is right multiplication by the longest element") {
  for (int n = 1; n <= 3; ++n) {
    const auto& elems = Group::get(CoxeterType::B, n).elements();
    for (const auto& u : elems)
      for (const auto& v : elems) {
        const AlgElem a = AlgElem::single(CoxeterType::B, u), b = AlgElem::single(CoxeterType::B, v);
        const AlgElem ab = internal_product(a, b);
        CHECK(push_forward(ElementMap::ForgetSigns, ab) ==
              internal_product(push_forward(ElementMap::ForgetSigns, a), push_forward(ElementMap::ForgetSigns, b)));
        CHECK(push_forward(ElementMap::Sigma, ab) == internal_product(a, push_forward(ElementMap::Sigma, b)));
      }
  }
}

TEST_CASE("span coordinates reassemble the target") {
  const Basis& x = descent_basis(CoxeterType::B, 3, DescentKind::X);
  const auto& y = descent_basis(CoxeterType::B, 3, DescentKind::Y);
  for (const auto& e : y.elements()) {
    const auto coords = express_in_span(e, x);
    REQUIRE(coords.has_value());
    CHECK(reassemble(*coords, x) == e);
  }
  CHECK_FALSE(express_in_span(AlgElem::single(CoxeterType::B, SignedPerm{2, 1, 3}), x).has_value());
}

TEST_CASE("span membership: sparse and dense paths agree") {
  const auto& y = descent_basis(CoxeterType::A, 5, DescentKind::Y);
  SpanBasis span(CoxeterType::A, 5);
  for (std::size_t i = 0; i < 6; ++i) span.add(y[i]);
  const AlgElem big = y[0] + y[3];
  const AlgElem small = AlgElem::single(CoxeterType::A, SignedPerm::identity(5));
  CHECK(span.contains(big));
  CHECK(span.contains(small));  // Y_∅ is the identity
  CHECK_FALSE(span.contains(y[7]));
  CHECK_FALSE(span.contains(AlgElem::single(CoxeterType::A, SignedPerm{2, 1, 3, 4, 5})));
  CHECK(span.rank() == 6);
}

TEST_CASE("determinant") {
  CHECK(determinant({{2, 1}, {1, 1}}) == 1);
  CHECK(determinant({{0, 1, 0}, {1, 0, 0}, {0, 0, 3}}) == -3);
  CHECK(determinant({{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("JSON round trip and errors") {
  const AlgElem a = Rational(3, 2) * AlgElem::single(CoxeterType::B, SignedPerm{-3, 1, 2}) +
                    AlgElem::single(CoxeterType::B, SignedPerm{1, 2, 3});
  CHECK(alg_elem_from_json(to_json(a)) == a);
  const auto bad = nlohmann::json::parse(R"({"group":"B","n":2,"terms":[{"perm":[1,1],"coeff":"1"}]})");
  CHECK_THROWS_AS(alg_elem_from_json(bad), std::invalid_argument);
  const auto zero = nlohmann::json::parse(R"({"group":"A","n":2,"terms":[{"perm":[2,1],"coeff":"1/0"}]})");
  CHECK_THROWS_AS(alg_elem_from_json(zero), std::invalid_argument);
}

TEST_CASE("rational text form") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
}
