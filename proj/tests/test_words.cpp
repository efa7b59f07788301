#include <doctest.h>

#include "peakalg/descent_bases.hpp"
#include "peakalg/peak_algebra.hpp"
#include "peakalg/words_action.hpp"
#include "test_util.hpp"

using namespace peakalg;

TEST_CASE("action of signed permutations on words") {
  const Alphabet ab = Alphabet::paired(3);  // a=0, ā=1, b=2
  const TensorElem t = TensorElem::word({0, 2});
  CHECK(act(t, SignedPerm::identity(2), ab) == t);
  CHECK(act(t, SignedPerm{-2, -1}, ab) == TensorElem::word({2, 1}));
  CHECK(act(t, SignedPerm{2, 1}, ab) == TensorElem::word({2, 0}));
  CHECK_THROWS_AS(act(t, SignedPerm{1, 2, 3}, ab), std::invalid_argument);
}

TEST_CASE("τ and the Jordan bracket") {
  const Alphabet ab = Alphabet::paired(3);
  CHECK(symmetrizer(TensorElem::word({0}), ab) == TensorElem::word({0}) + TensorElem::word({1}));
  // τ(a b) = ab + b̄ā = ab + bā.
  CHECK(symmetrizer(TensorElem::word({0, 2}), ab) == TensorElem::word({0, 2}) + TensorElem::word({2, 1}));
  const Alphabet abc = Alphabet::trivial(3);
  CHECK(symmetrizer(TensorElem::word({0, 1, 0}), abc) == Rational(2) * TensorElem::word({0, 1, 0}));
  CHECK(jordan_bracket(TensorElem::word({0}), TensorElem::word({1})) == TensorElem::word({0, 1}) + TensorElem::word({1, 0}));
  CHECK(nested_bracket({0, 1, 2}).to_string(abc) == "abc + bac + cab + cba");
}

TEST_CASE("a⊗b⊗c·P°_(3) is the nested bracket") {
  const Alphabet abc = Alphabet::trivial(3);
  const AlgElem p0 = interior_peak_basis(3, PeakIndex(3, 0, true));
  const TensorElem got = act(TensorElem::word({0, 1, 2}), p0, abc);
  CHECK(got.terms().size() == 4);
  CHECK(got == nested_bracket({0, 1, 2}));
}

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet({"a", "b"}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"a"}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet::paired(1), std::invalid_argument);
  CHECK(Alphabet::trivial(2).words(3).size() == 8);
  CHECK(TensorElem::word({}).to_string(Alphabet::trivial(1)) == "ε");
}

TEST_CASE("action identities and laws") {
  for (int n = 1; n <= 4; ++n) {
    VerifyReport r("words");
    verify_action_identities(n, Alphabet::trivial(3), r);
    if (n <= 3) verify_action_identities(n, Alphabet::paired(3), r);
    if (n <= 3) verify_action_laws(n, Alphabet::paired(3), r);
    require_all_pass(r);
  }
  VerifyReport r("words");
  CHECK_THROWS(verify_action_identities(6, Alphabet::trivial(2), r));
  CHECK_THROWS(verify_action_identities(2, Alphabet::trivial(5), r));
}
