#pragma once

// Sparse exact-rational elements of the group algebras QS_n, QB_n, QD_n and the
// linear algebra needed to decide span membership.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "peakalg/core_groups.hpp"
#include "peakalg/rational.hpp"

namespace peakalg {

/// Packed integer keys for the elements of one group. Type A keys are the
/// Lehmer rank of the permutation; types B and D use rank·2^n + sign mask,
/// where bit i of the mask is set when w_{i+1} is negative.
class Group {
 public:
  /// Shared, lazily built instance. Throws CapExceeded above the enumeration caps.
  static const Group& get(CoxeterType t, int n);

  CoxeterType type() const { return type_; }
  int rank() const { return n_; }
  std::uint64_t order() const { return elements_.size(); }
  std::uint32_t key_space() const { return key_space_; }

  std::uint32_t key(const SignedPerm& w) const;
  const SignedPerm& element(std::uint32_t key) const { return by_key_[key]; }
  /// Elements in enumeration order.
  const std::vector<SignedPerm>& elements() const { return elements_; }
  bool contains(const SignedPerm& w) const { return w.rank() == n_ && w.in_group(type_); }

  /// key(u∘v) without materializing the product.
  std::uint32_t product_key(const SignedPerm& u, const SignedPerm& v) const;

  std::string name() const { return std::string(1, type_letter(type_)) + std::to_string(n_); }

 private:
  Group(CoxeterType t, int n);
  CoxeterType type_;
  int n_;
  std::uint32_t key_space_;
  std::vector<SignedPerm> elements_;
  std::vector<SignedPerm> by_key_;
};

std::uint32_t pack_key(CoxeterType t, const SignedPerm& w);

class AlgElem {
 public:
  struct Term {
    std::uint32_t key;
    Rational coeff;
  };

  /// The zero element of QW for W of the given type and rank.
  AlgElem(CoxeterType t, int n);

  static AlgElem single(CoxeterType t, const SignedPerm& w, const Rational& c = 1);
  static AlgElem identity(CoxeterType t, int n) { return single(t, SignedPerm::identity(n)); }
  /// Σ of the listed elements with coefficient 1 each (duplicates accumulate).
  static AlgElem sum_of(CoxeterType t, int n, const std::vector<SignedPerm>& elems);
  /// Build from (key, coeff) pairs in any order; duplicates accumulate.
  static AlgElem from_terms(CoxeterType t, int n, std::vector<Term> terms);

  CoxeterType type() const { return type_; }
  int rank() const { return n_; }
  const Group& group() const { return Group::get(type_, n_); }

  /// Sorted by key, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const SignedPerm& w) const;
  Rational coeff_of_key(std::uint32_t key) const;

  /// (element, coefficient) pairs in enumeration order.
  std::vector<std::pair<SignedPerm, Rational>> to_pairs() const;

  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem& operator*=(const Rational& c);
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(const Rational& c, AlgElem a) { return a *= c; }
  friend AlgElem operator-(AlgElem a) { return a *= Rational(-1); }
  friend bool operator==(const AlgElem& a, const AlgElem& b);

  bool same_group(const AlgElem& o) const { return type_ == o.type_ && n_ == o.n_; }
  /// Every coefficient is an integer.
  bool integral() const;

  std::string to_string() const;

 private:
  CoxeterType type_;
  int n_;
  std::vector<Term> terms_;
};

/// Σ c_i·a_i; throws std::invalid_argument on mixed groups or an empty list.
AlgElem linear_combine(const std::vector<std::pair<Rational, AlgElem>>& pairs);

/// Convolution product in QW. Uses a 64-bit integer accumulator when every
/// coefficient is integral and the result provably fits; exact rationals otherwise.
AlgElem internal_product(const AlgElem& a, const AlgElem& b);

enum class ElementMap { ForgetSigns, Sigma, Chi, Rho };

/// Σ c_w·w ↦ Σ c_w·f(w). Domain and codomain: ForgetSigns B,D→A; Sigma B→B;
/// Chi B→D; Rho D→D.
AlgElem push_forward(ElementMap f, const AlgElem& a);
AlgElem push_forward(const AlgElem& a, CoxeterType target_type, int target_rank,
                     const std::function<SignedPerm(const SignedPerm&)>& f);

/// Embeds an element of QS_n or QD_n into QB_n (or QS_n into QD_n).
AlgElem include_into(const AlgElem& a, CoxeterType target);

/// Incremental row echelon form over Q. Every row's pivot is its smallest key and
/// pivots are distinct, so reduction proceeds in increasing key order.
class SpanBasis {
 public:
  SpanBasis(CoxeterType t, int n);

  /// Appends an input vector. Returns true if it increased the rank.
  bool add(const AlgElem& e);
  std::size_t rank() const { return rows_.size(); }
  std::size_t input_count() const { return inputs_; }

  /// Coordinates with respect to the inputs (dependent inputs get 0), or nullopt.
  std::optional<std::vector<Rational>> solve(const AlgElem& target) const;
  bool contains(const AlgElem& target) const;

 private:
  struct Row {
    std::vector<AlgElem::Term> entries;  // entries[0] is the pivot with coefficient 1
    std::vector<Rational> combo;         // row = Σ combo[i]·input_i
  };
  /// Reduces target against the rows. Returns the row multipliers; on exit the
  /// scratch vector holds the remainder, and the return flag is true iff it is zero.
  bool reduce(const AlgElem& target, std::vector<Rational>& multipliers, std::vector<Rational>& scratch,
              std::uint32_t& first_left) const;

  CoxeterType type_;
  int n_;
  std::uint32_t key_space_;
  std::size_t inputs_ = 0;
  std::vector<Row> rows_;
  std::vector<std::int32_t> pivot_row_;  // key -> row index or -1
};

struct CoordVector {
  std::vector<std::string> labels;
  std::vector<Rational> coords;

  bool operator==(const CoordVector&) const = default;
  bool integral() const;
  std::string to_string() const;
};

/// A labeled list of elements together with its echelon form.
class Basis {
 public:
  Basis(std::string name, CoxeterType t, int n, std::vector<std::string> labels, std::vector<AlgElem> elements);

  const std::string& name() const { return name_; }
  CoxeterType type() const { return type_; }
  int rank() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<AlgElem>& elements() const { return elements_; }
  const AlgElem& operator[](std::size_t i) const { return elements_[i]; }
  const SpanBasis& span() const { return *span_; }
  std::size_t dimension() const { return span_->rank(); }

 private:
  std::string name_;
  CoxeterType type_;
  int n_;
  std::vector<std::string> labels_;
  std::vector<AlgElem> elements_;
  std::shared_ptr<SpanBasis> span_;
};

std::optional<CoordVector> express_in_span(const AlgElem& target, const Basis& basis);
std::optional<CoordVector> express_in_span(const AlgElem& target, const std::vector<AlgElem>& basis);
/// Σ coords[i]·basis[i].
AlgElem reassemble(const CoordVector& coords, const Basis& basis);

std::size_t span_rank(const std::vector<AlgElem>& elems);

/// Exact determinant of a square matrix by Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

/// {"group":"B","n":4,"terms":[{"perm":[-3,1,2,-4],"coeff":"3/2"}]}, terms in enumeration order.
nlohmann::json to_json(const AlgElem& a);
/// Accepts integer or "p/q" string coefficients. Throws std::invalid_argument with the term position.
AlgElem alg_elem_from_json(const nlohmann::json& j);

}  // namespace peakalg
