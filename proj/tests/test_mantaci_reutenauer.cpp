#include <doctest.h>

#include "peakalg/descent_bases.hpp"
#include "peakalg/mantaci_reutenauer.hpp"
#include "test_util.hpp"

using namespace peakalg;

namespace {

using SC = SignedComposition;

// Definitional S_α (tilde = false: |w_j| increasing) and S̃_α (tilde = true: w_j increasing):
// constant sign equal to the part's sign on each interval.
AlgElem s_by_definition(const SC& alpha, bool tilde) {
  const int n = alpha.n();
  std::vector<SignedPerm> hits;
  for (const auto& w : Group::get(CoxeterType::B, n).elements()) {
    bool ok = true;
    int pos = 0;
    for (int a : alpha.parts()) {
      const int len = a > 0 ? a : -a;
      for (int i = pos; i < pos + len && ok; ++i) {
        const int v = w.value(i);
        if ((v > 0) != (a > 0)) ok = false;
        if (i > pos) {
          const int prev = w.value(i - 1);
          if (tilde ? prev >= v : std::abs(prev) >= std::abs(v)) ok = false;
        }
      }
      pos += len;
    }
    if (ok) hits.push_back(w);
  }
  return AlgElem::sum_of(CoxeterType::B, n, hits);
}

}  // namespace

TEST_CASE("signed composition examples") {
  const SC a = SC::parse("(-2,1,-1,-2,2,2,3)");
  const auto segs = a.segments();
  REQUIRE(segs.size() == 4);
  CHECK(segs[0] == SC({-2}));
  CHECK(segs[1] == SC({1}));
  CHECK(segs[2] == SC({-1, -2}));
  CHECK(segs[3] == SC({2, 2, 3}));
  CHECK(SC({3, -2, -1, -2, 4, 2, -3, 1}).tilde() == SC({3, -1, -3, -1, 4, 2, -1, -1, -1, 1}));
  CHECK(leq(SC({-2, 1, -3, 2, 5}), a));
  CHECK(preceq(a, SC({-2, 1, -3, 2, 1, 1, 3})));
  CHECK(SC({2, -1, -2, 1}).abs() == std::vector{2, 1, 2, 1});
  CHECK(SC({2, -1, -2, 1}).o_comp() == std::vector{2, 1, 1, 1, 1});
  CHECK_THROWS_AS(SC({1, 0}), std::invalid_argument);
  CHECK(t_class_of(SignedPerm{-3, 4, 6, 1, 7, -5, -2, -8}) == SC({-1, 2, 2, -1, -2}));
}

TEST_CASE("2·3^{n-1} signed compositions and the tilde involution") {
  int expect = 2;
  for (int n = 1; n <= 7; ++n, expect *= 3) {
    const auto all = all_signed_compositions(n);
    CHECK(all.size() == static_cast<std::size_t>(expect));
    for (const auto& a : all) CHECK(a.tilde().tilde() == a);
  }
}

TEST_CASE("T classes partition B_n and every basis has dimension 2·3^{n-1}, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const Group& g = Group::get(CoxeterType::B, n);
    std::vector<int> hits(g.key_space(), 0);
    for (const auto& a : all_signed_compositions(n)) {
      const AlgElem t = mr_basis(MRKind::T, a);
      for (const auto& term : t.terms()) {
        ++hits[term.key];
        CHECK(t_class_of(g.element(term.key)) == a);
      }
    }
    for (const auto& w : g.elements()) CHECK(hits[g.key(w)] == 1);
    for (MRKind k : {MRKind::T, MRKind::S, MRKind::STilde}) CHECK(omega_basis(n, k).dimension() == omega_basis(n, MRKind::T).size());
  }
}

TEST_CASE("S_α and S̃_α match their definitions and their T expansions, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : all_signed_compositions(n)) {
      CHECK(mr_basis(MRKind::S, a) == s_by_definition(a, false));
      CHECK(mr_basis(MRKind::STilde, a) == s_by_definition(a, true));
      AlgElem s(CoxeterType::B, n), st(CoxeterType::B, n);
      for (const auto& b : all_signed_compositions(n)) {
        if (leq(b, a)) s += mr_basis(MRKind::T, b);
        if (preceq(b, a.tilde())) st += mr_basis(MRKind::T, b);
      }
      CHECK(s == mr_basis(MRKind::S, a));
      CHECK(st == mr_basis(MRKind::STilde, a));
    }
}

TEST_CASE("forgetting signs on Ω(B_n) matches the closed forms, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : all_signed_compositions(n))
      for (MRKind k : {MRKind::T, MRKind::S, MRKind::STilde})
        CHECK(phi_on_omega(a, k) == push_forward(ElementMap::ForgetSigns, mr_basis(k, a)));
}

TEST_CASE("Σ(B_n) ⊆ Ω(B_n) and X⁰_(n)·S̃_α") {
  for (int n = 1; n <= 4; ++n) {
    const SpanBasis& omega = omega_basis(n, MRKind::T).span();
    for (const auto& y : descent_basis(CoxeterType::B, n, DescentKind::Y).elements()) CHECK(omega.contains(y));
    const AlgElem x0 = x0_of({n});
    for (const auto& a : all_signed_compositions(n)) CHECK(bstilde_product(a) == internal_product(x0, mr_basis(MRKind::STilde, a)));
  }
}

TEST_CASE("Ω(B_n) checks: full products for n <= 3, structure for n = 4") {
  for (int n = 1; n <= 4; ++n) {
    VerifyReport r("mr");
    omega_closure(n, r, n <= 3);
    require_all_pass(r);
  }
}
