#pragma once

// External (graded) structure on ⊕_n QS_n and ⊕_n QB_n: the shuffle product u∗v,
// the coproduct Δ(w) = Σ_p w_(p) ⊗ w'_(p), and checks of the Hopf-level statements
// for Σ(A), Σ(B), Ω(B), I⁰, 𝒫 and 𝒫° on truncated graded pieces.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "peakalg/group_algebra.hpp"
#include "peakalg/report.hpp"

namespace peakalg {

enum class Family { QS, QB, SolA, SolB, OmegaB, Peak, PeakIdeal, I0 };

const char* family_name(Family f);
CoxeterType family_type(Family f);
/// A basis of the degree-n piece (the identity in degree 0). QS and QB have none and throw.
/// The bases are unions of classes: Y for Σ, T for Ω, P_F, P°_F, and Y⁰ for I⁰.
const Basis& family_basis(Family f, int n);
bool family_contains(Family f, const AlgElem& a);

struct GradedElem {
  Family family = Family::QS;
  std::map<int, AlgElem> parts;  // degree -> component; zero components are dropped

  static GradedElem homogeneous(Family f, const AlgElem& a);
  CoxeterType type() const { return family_type(family); }
  /// Throws DomainError naming the first degree whose component leaves the family.
  void validate() const;
  friend bool operator==(const GradedElem&, const GradedElem&) = default;
};

/// Finite sum of tensors a ⊗ b split by bidegree. Coefficients are keyed by the
/// pair of group keys in the two factors; both factors share one Coxeter type.
class Tensor2 {
 public:
  using Entries = std::map<std::pair<std::uint32_t, std::uint32_t>, Rational>;

  explicit Tensor2(CoxeterType t) : type_(t) {}
  static Tensor2 of(const AlgElem& a, const AlgElem& b);

  CoxeterType type() const { return type_; }
  const std::map<std::pair<int, int>, Entries>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  std::size_t term_count() const;

  void add(int p, int q, std::uint32_t left, std::uint32_t right, const Rational& c);
  Tensor2& operator+=(const Tensor2& o);
  friend bool operator==(const Tensor2&, const Tensor2&) = default;

  /// "(p,q): c·u⊗v + ..." for witnesses.
  std::string to_string(std::size_t max_terms = 6) const;

 private:
  CoxeterType type_;
  std::map<std::pair<int, int>, Entries> parts_;
};

/// u × v: u on the first p positions, v shifted by p on the rest, signs kept.
SignedPerm block(const SignedPerm& u, const SignedPerm& v);
/// Sh(p,q): ξ with ξ_1 < .. < ξ_p and ξ_{p+1} < .. < ξ_{p+q}, in lexicographic order.
std::vector<SignedPerm> shuffles(int p, int q);

/// The unique factorization w = (w_(p) × w'_(p))·ξ^{-1} with ξ ∈ Sh(p, n-p).
struct Split {
  SignedPerm left;
  SignedPerm right;
  SignedPerm shuffle;
};
/// Positions holding |value| <= p, read left to right, give w_(p) and ξ_1..ξ_p.
Split split_at(const SignedPerm& w, int p);

/// u∗v = Σ_{ξ ∈ Sh(p,q)} ξ·(u×v). Types A or B, equal on both sides. Throws CapExceeded
/// when p+q is above the enumeration cap.
AlgElem external_product(const AlgElem& u, const AlgElem& v);
GradedElem external_product(const GradedElem& a, const GradedElem& b);

Tensor2 coproduct(const AlgElem& a);
Tensor2 coproduct(const GradedElem& a);
/// The degree-0 coefficient.
Rational counit(const GradedElem& a);

/// (a⊗b)(c⊗d) = ac ⊗ bd on matching bidegrees.
Tensor2 internal_product(const Tensor2& s, const Tensor2& t);

/// Linear map between group algebras of one type; it may change the degree.
using LinearMap = std::function<AlgElem(const AlgElem&)>;
/// (f ⊗ id) and (id ⊗ f), evaluated on the columns (rows) of each bidegree block so
/// that f only ever sees elements of its domain when the tensor lies in domain ⊗ anything.
Tensor2 apply_left(const Tensor2& t, const LinearMap& f);
Tensor2 apply_right(const Tensor2& t, const LinearMap& f);

/// t ∈ left ⊗ right, decided block by block: every column in left, every row in right.
bool tensor_in(const Tensor2& t, Family left, Family right);

/// Coordinates of t in basis_p ⊗ basis'_q for one bidegree; nullopt if outside.
std::optional<std::map<std::pair<std::size_t, std::size_t>, Rational>> tensor_coordinates(
    const Tensor2& t, int p, int q, const Basis& left, const Basis& right);

/// η on QB_1: η(X_(1)) = 1, η(X_(0,1)) = 0, i.e. η(1) = 1, η(1̄) = -1; zero in other degrees.
Rational eta(const AlgElem& a);
/// (η ⊗ id)∘Δ.
AlgElem beta_via_coproduct(const AlgElem& a);

/// Graded extensions: Θ and Θ± are the identity in degree 0; β vanishes in degree 0;
/// π vanishes in degrees 0 and 1.
AlgElem theta_graded(const AlgElem& a);
AlgElem theta_pm_graded(const AlgElem& a);
AlgElem beta_graded(const AlgElem& a);
AlgElem pi_graded(const AlgElem& a);

/// Basis elements named by compositions: X_α in Σ(A), X_(a0,..,ak) in Σ(B) (pseudo
/// composition), X⁰_α in I⁰, S̃_α in Ω(B). The empty composition gives 1 in degree 0.
AlgElem x_a(const std::vector<int>& alpha);
AlgElem x_b(const std::vector<int>& pseudo);
AlgElem x0_b(const std::vector<int>& alpha);
AlgElem stilde(const std::vector<int>& signed_alpha);
/// Every composition of n (the empty one for n = 0).
std::vector<std::vector<int>> compositions(int n);

/// P_{1} ∗ P_{1} in degree 4.
AlgElem peak_product_witness();

/// Coproduct laws, associativity and shuffle multiplicity up to max_degree (at most 6).
void verify_hopf_laws(int max_degree, VerifyReport& report);
/// Generating relations for the products and coproducts up to total degree max_degree.
void verify_hopf_relations(int max_degree, VerifyReport& report);
/// Closure, Θ/Θ± morphisms, β and π compatibility, internal/coproduct compatibility,
/// the 𝒫 counterexample and the free I⁰-module structure of Σ(B), up to max_degree.
void verify_hopf_structure(int max_degree, VerifyReport& report);
void verify_hopf(int max_degree, VerifyReport& report);

}  // namespace peakalg
