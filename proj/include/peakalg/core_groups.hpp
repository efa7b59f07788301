#pragma once

// Element-level arithmetic for the Coxeter groups S_n (type A_{n-1}), B_n and D_n.
//
// Every element is a SignedPerm in one-line notation w = (w_1, ..., w_n), with
// bars encoded as negative integers. S_n is the all-positive subset and D_n the
// subset with an even number of negative entries.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace peakalg {

inline constexpr int kMaxRank = 8;

enum class CoxeterType : std::uint8_t { A, B, D };

char type_letter(CoxeterType t);
CoxeterType parse_type(std::string_view text);

class SignedPerm {
 public:
  /// The unique element of rank 0.
  SignedPerm() = default;

  /// Validates that |values| is a permutation of {1..n}; throws std::invalid_argument.
  explicit SignedPerm(std::span<const int> values);
  SignedPerm(std::initializer_list<int> values);

  static SignedPerm identity(int n);

  int rank() const { return n_; }

  /// w(i) for i in {±1, ..., ±n}, extended by w(-i) = -w(i).
  int operator()(int i) const { return i > 0 ? v_[i - 1] : -v_[-i - 1]; }

  /// Zero-based access to the one-line notation.
  int value(int index) const { return v_[index]; }
  std::vector<int> values() const;

  int bar_count() const;
  bool is_unsigned() const { return bar_count() == 0; }
  bool in_group(CoxeterType t) const;

  SignedPerm inverse() const;

  /// Comma-separated one-line text, e.g. "2,-4,1,3".
  std::string to_string() const;
  static SignedPerm parse(std::string_view text);

  /// Lexicographic on (rank, values); this is also the enumeration order.
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

 private:
  friend struct SignedPermAccess;
  std::array<std::int8_t, kMaxRank> v_{};
  std::uint8_t n_ = 0;
};

/// (u*v)_i = sgn(v_i) * u_{|v_i|}, i.e. u∘v as maps on {±1..±n}. With this rule the
/// action on words is a right action. Throws std::invalid_argument on rank mismatch.
SignedPerm compose(const SignedPerm& u, const SignedPerm& v);
inline SignedPerm operator*(const SignedPerm& u, const SignedPerm& v) { return compose(u, v); }

/// Standard Coxeter generators. Index 0 is s_0 = (-1,2,..,n) for type B and
/// s_{1'} = (-2,-1,3,..,n) for type D; index i >= 1 is the transposition of
/// positions i, i+1. Type A has no index 0.
SignedPerm generator(CoxeterType t, int n, int index);
std::vector<int> generator_indices(CoxeterType t, int n);

/// Subset of the generators of a Coxeter system, stored as a bitmask in which
/// bit i is generator i. For type D bit 0 is the generator 1' (token "1'").
class GeneratorSet {
 public:
  GeneratorSet(CoxeterType t, int n, std::uint32_t mask);
  static GeneratorSet of(CoxeterType t, int n, std::initializer_list<int> elements);
  static GeneratorSet empty(CoxeterType t, int n) { return {t, n, 0}; }
  static GeneratorSet full(CoxeterType t, int n) { return {t, n, valid_mask(t, n)}; }

  /// Bits that are legal for the given type and rank.
  static std::uint32_t valid_mask(CoxeterType t, int n);

  CoxeterType type() const { return type_; }
  int rank() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  bool contains(int i) const { return i >= 0 && i < 32 && ((mask_ >> i) & 1U); }
  int size() const;
  std::vector<int> elements() const;
  GeneratorSet complement() const { return {type_, n_, valid_mask(type_, n_) & ~mask_}; }

  /// "{0,2}" or "{1',1,3}"; parse accepts the same form.
  std::string to_string() const;
  static GeneratorSet parse(CoxeterType t, int n, std::string_view text);

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  CoxeterType type_;
  int n_;
  std::uint32_t mask_;
};

/// All generator subsets of a system, in increasing bitmask order.
std::vector<GeneratorSet> all_generator_sets(CoxeterType t, int n);

/// A peak set F ⊆ [n-1] with no two consecutive elements; the interior variant
/// additionally excludes 1. Bit i is element i.
class PeakIndex {
 public:
  PeakIndex(int n, std::uint32_t mask, bool interior = false);
  static PeakIndex of(int n, std::initializer_list<int> elements, bool interior = false);

  int rank() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  bool interior() const { return interior_; }
  bool contains(int i) const { return i >= 0 && i < 32 && ((mask_ >> i) & 1U); }
  int size() const;
  std::vector<int> elements() const;
  std::string to_string() const;

  static bool is_sparse(std::uint32_t mask) { return (mask & (mask >> 1)) == 0; }

  friend bool operator==(const PeakIndex&, const PeakIndex&) = default;

 private:
  int n_;
  std::uint32_t mask_;
  bool interior_;
};

/// 𝔉_n (resp. its interior part) in increasing bitmask order.
std::vector<PeakIndex> all_peak_sets(int n, bool interior = false);

/// f_0 = f_1 = 1, f_n = f_{n-1} + f_{n-2}.
std::uint64_t fibonacci(int n);

/// Descent set under the conventions of the given type; throws DomainError if
/// w is not in that group.
GeneratorSet descent_set(const SignedPerm& w, CoxeterType t);

PeakIndex peak_set(const SignedPerm& u);
PeakIndex interior_peak_set(const SignedPerm& u);

/// Λ(J) = {i ∈ J : i-1 ∉ J} and its interior variant (also drops 1).
PeakIndex lambda(const GeneratorSet& j);
PeakIndex lambda_interior(const GeneratorSet& j);

SignedPerm forget_signs(const SignedPerm& w);
/// Reverses every sign.
SignedPerm sigma(const SignedPerm& w);
/// w if w ∈ D_n, otherwise w·s_0. Not a group morphism.
SignedPerm chi_element(const SignedPerm& w);
/// Reverses the signs of w_1 and w_2; requires w ∈ D_n and n >= 2.
SignedPerm rho_element(const SignedPerm& w);

struct EnumerationCaps {
  int a = 8;
  int b = 7;
  int d = 7;

  int for_type(CoxeterType t) const;
  /// Defaults overridden by PEAKALG_CAP ("7" or "A=8,B=6,D=6").
  static const EnumerationCaps& current();
  static EnumerationCaps parse(std::string_view text);
};

std::uint64_t group_order(CoxeterType t, int n);

/// Every element of the group exactly once, lexicographic on values.
std::vector<SignedPerm> enumerate(CoxeterType t, int n, const EnumerationCaps& caps = EnumerationCaps::current());

struct SignedPermHash {
  std::size_t operator()(const SignedPerm& w) const noexcept;
};

/// Coxeter length of every element, by breadth-first search from the identity
/// over right multiplication by the standard generators. n <= 6.
class LengthTable {
 public:
  LengthTable(CoxeterType t, int n);
  int length(const SignedPerm& w) const;
  CoxeterType type() const { return type_; }
  int rank() const { return n_; }
  std::size_t size() const { return table_.size(); }
  /// {s : ℓ(ws) < ℓ(w)}.
  GeneratorSet length_descents(const SignedPerm& w) const;

 private:
  CoxeterType type_;
  int n_;
  std::unordered_map<SignedPerm, int, SignedPermHash> table_;
};

}  // namespace peakalg

template <>
struct std::hash<peakalg::SignedPerm> : peakalg::SignedPermHash {};
