#pragma once

// Signed compositions and the Mantaci–Reutenauer algebra Ω(B_n) with its
// T, S and S̃ bases.

#include <string>
#include <string_view>
#include <vector>

#include "peakalg/group_algebra.hpp"
#include "peakalg/report.hpp"

namespace peakalg {

class SignedComposition {
 public:
  SignedComposition() = default;
  /// Throws std::invalid_argument on a zero part.
  explicit SignedComposition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  /// Σ |a_i|.
  int n() const;

  /// Maximal runs of parts with constant sign.
  std::vector<SignedComposition> segments() const;
  bool positive() const { return !parts_.empty() && parts_.front() > 0; }

  /// |α|: signs forgotten.
  std::vector<int> abs() const;
  /// Sums over the maximal runs of alternating sign.
  std::vector<int> underline() const;
  /// Each negative segment replaced by its complement composition, sign kept.
  SignedComposition tilde() const;
  /// Negative segments replaced by all ones, signs dropped.
  std::vector<int> o_comp() const;
  /// Negative segments complemented, positive segments merged, then underline.
  std::vector<int> u_comp() const;

  std::string to_string() const;
  static SignedComposition parse(std::string_view text);

  friend bool operator==(const SignedComposition&, const SignedComposition&) = default;
  friend auto operator<=>(const SignedComposition&, const SignedComposition&) = default;

 private:
  std::vector<int> parts_;
};

/// All 2·3^{n-1} signed compositions of n (one, the empty one, for n = 0), ordered by
/// underlying subset mask and then by sign pattern.
std::vector<SignedComposition> all_signed_compositions(int n);

/// Same segment count and signs, and each segment of b refines the matching one of a.
bool leq(const SignedComposition& a, const SignedComposition& b);
/// As leq, but on negative segments a refines b instead.
bool preceq(const SignedComposition& a, const SignedComposition& b);

/// The signed composition whose T-class contains w.
SignedComposition t_class_of(const SignedPerm& w);

enum class MRKind { T, S, STilde };

AlgElem mr_basis(MRKind kind, const SignedComposition& alpha);
/// Labeled basis of Ω(B_n) in all_signed_compositions order. Cached.
const Basis& omega_basis(int n, MRKind kind);

/// Closed forms in Σ(A_{n-1}) for φ(S_α), φ(T_α), φ(S̃_α).
AlgElem phi_on_omega(const SignedComposition& alpha, MRKind kind);

/// X⁰_{(n)}·S̃_α computed as an internal product.
AlgElem bstilde_product(const SignedComposition& alpha);
/// X⁰_{|α|} = X_{{0} ∪ J(|α|)} in Σ(B_n).
AlgElem x0_of(const std::vector<int>& composition);

/// Basis change checks, partition, closure (n <= 3 by default) and Σ(B_n) ⊆ Ω(B_n).
void omega_closure(int n, VerifyReport& report, bool full_products);

}  // namespace peakalg
