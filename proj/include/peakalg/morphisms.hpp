#pragma once

// Algebra maps between descent algebras, the peak algebra and the Mantaci–Reutenauer
// algebra: φ, ψ, χ, β, β², γ, Θ, Θ±. Closed forms on bases, commutative diagrams,
// exact sequences and principal right ideals.

#include <string>
#include <vector>

#include "peakalg/descent_bases.hpp"
#include "peakalg/group_algebra.hpp"
#include "peakalg/report.hpp"

namespace peakalg {

/// χ(Y_J) or χ(X_J) in Σ(D_n) for J ⊆ {0,..,n-1}, n >= 2.
AlgElem chi_closed_form(int n, const GeneratorSet& j, DescentKind kind);
/// φ(Y_J) or φ(X_J) in 𝒫_n for J ⊆ {0,..,n-1}.
AlgElem phi_closed_form(int n, const GeneratorSet& j, DescentKind kind);
/// φ(Y⁰_J) or φ(X⁰_J) in 𝒫°_n for a type B set J with 0 ∉ J.
AlgElem phi_ideal_closed_form(int n, const GeneratorSet& j, DescentKind kind);

/// Y⁰_J = Y_{{0}∪J} + Y_J and X⁰_J = X_{{0}∪J}, for 0 ∉ J.
AlgElem y0_basis(int n, const GeneratorSet& j);
AlgElem x0_basis(int n, const GeneratorSet& j);

enum class PsiCase { Plain, One, OnePrime, Both };
const char* psi_case_name(PsiCase c);
/// The D-set for a case: J, {1}∪J, {1'}∪J or {1',1}∪J. J ⊆ {2,..,n-1} as a type D set.
GeneratorSet psi_case_set(int n, PsiCase c, const GeneratorSet& j);
/// ψ on Y or X of psi_case_set(n, c, j), n >= 2.
AlgElem psi_closed_form(int n, PsiCase c, const GeneratorSet& j, DescentKind kind);

/// Element-level maps on certified elements of the relevant descent algebra.
/// Each throws DomainError for input outside its domain algebra.
AlgElem phi_map(const AlgElem& a);  // Σ(B_n) → Σ(A_{n-1})
AlgElem psi_map(const AlgElem& a);  // Σ(D_n) → Σ(A_{n-1})
AlgElem chi_map(const AlgElem& a);  // Σ(B_n) → Σ(D_n)

/// β: Σ(B_n) → Σ(B_{n-1}), β²: Σ(B_n) → Σ(B_{n-2}), γ: Σ(D_n) → Σ(B_{n-2}), all
/// evaluated through exact X-coordinates.
AlgElem beta_map(const AlgElem& a);
AlgElem beta_squared(const AlgElem& a);
AlgElem gamma_map(const AlgElem& a);
/// β(Y_J) = Y_{J-1} if 0 ∉ J, else -Y_{(J∖0)-1}.
AlgElem beta_on_y(int n, const GeneratorSet& j);

/// Θ(a) = 2·P°_{(n)}·a on Σ(A_{n-1}), n >= 1.
AlgElem theta(const AlgElem& a);
/// Θ±(a) = X⁰_{(n)}·a on Ω(B_n), n >= 1.
AlgElem theta_pm(const AlgElem& a);
/// Θ(X_J) = 2^{1+#J} Σ_{F ∈ 𝔉°, F ⊆ J∪(J+1)} P°_F for a type A set J.
AlgElem theta_closed_form_x(int n, const GeneratorSet& j);

/// Y^{(i)}_J, i ∈ {1,2,3}, J ⊆ {2,..,n-1} as a type D set.
AlgElem imchi_basis(int n, const GeneratorSet& j, int i);
/// Y^{(i)}_J computed directly from the three classes of D_n.
AlgElem imchi_by_class(int n, const GeneratorSet& j, int i);

/// Spanning sets of I⁰_n = ker β, I^{0,1}_n = ker β² (type B) and I^{1',1}_n = ker γ (type D).
std::vector<AlgElem> ideal_i0(int n);
std::vector<AlgElem> ideal_i01(int n);
std::vector<AlgElem> ideal_d11(int n);

/// {φ(X_{F-1})}_{F ∈ 𝔉_n}, labeled by F-1.
const Basis& phi_x_basis(int n);

struct DiagramSpec {
  std::string name;
  std::vector<std::string> nodes;
  std::vector<std::string> arrows;
  std::vector<std::string> equations;
  int min_n = 1;
};

/// bda, pi, gammabeta, theta, bexact, dexact, sbexact.
const std::vector<DiagramSpec>& diagram_catalog();
/// Throws std::invalid_argument on an unknown name.
const DiagramSpec& diagram(const std::string& name);
/// Checks every equation of the diagram at rank n. Ranks below min_n are skipped.
void verify_diagram(const DiagramSpec& spec, int n, VerifyReport& report);

/// generator·algebra spans exactly the ideal for the four principal right ideals at rank n.
void principal_right_ideal_check(int n, VerifyReport& report);
/// Y_{1}·P°_{2} at n = 3 lies outside 𝒫°_3.
Outcome left_ideal_witness();
/// Θ± restricted to I⁰_n has non-zero determinant on the X⁰ basis.
Outcome theta_pm_bijective(int n);
/// dim ker of a hypothetical 𝒫_n → 𝒫_{n-1} is f_{n-2}, smaller than dim 𝒫°_n = f_{n-1}.
Outcome nomorphism_arithmetic(int n);
/// φ(X_{{2}})² at n = 5 in the basis {φ(X_{F-1})}.
CoordVector phi_x2_square();

/// Closed forms against element-level computation, images and kernels at rank n.
/// Multiplicativity on all basis pairs is checked for n <= 4.
void verify_chi(int n, VerifyReport& report);
void verify_phi(int n, VerifyReport& report);
void verify_psi(int n, VerifyReport& report);
void verify_ideals(int n, VerifyReport& report);
void verify_theta(int n, VerifyReport& report);

}  // namespace peakalg
