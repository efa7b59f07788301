#pragma once

// Solomon descent algebras Σ(A_{n-1}), Σ(B_n), Σ(D_n): the Y and X bases, the
// subset/composition codec and structure constants.

#include <string>
#include <vector>

#include <json.hpp>

#include "peakalg/core_groups.hpp"
#include "peakalg/group_algebra.hpp"

namespace peakalg {

/// Descent mask of every key of the group (index = key). Cached.
const std::vector<std::uint32_t>& descent_masks(CoxeterType t, int n);

/// Y_J = Σ_{Des(w)=J} w.
AlgElem y_basis(CoxeterType t, int n, const GeneratorSet& j);
/// X_J = Σ_{Des(w)⊆J} w = Σ_{I⊆J} Y_I.
AlgElem x_basis(CoxeterType t, int n, const GeneratorSet& j);
/// Y_J recovered from the X basis: Σ_{I⊆J} (-1)^{#J-#I} X_I.
AlgElem y_from_x(CoxeterType t, int n, const GeneratorSet& j);

enum class DescentKind { Y, X };

/// The whole basis in increasing mask order, labeled by subset text. Cached.
const Basis& descent_basis(CoxeterType t, int n, DescentKind kind);

/// Partial sums: type A sets ↔ ordinary compositions (a_1..a_k) of n; type B sets ↔
/// pseudo compositions (a_0..a_k) with a_0 >= 0, where 0 ∈ J iff a_0 = 0.
namespace codec {

std::vector<int> to_composition(const GeneratorSet& j);
GeneratorSet from_composition(CoxeterType t, const std::vector<int>& parts);
/// Composition of the complementary subset (same kind).
std::vector<int> complement(CoxeterType t, const std::vector<int>& parts);
/// a refines b (as compositions of the same n and kind).
bool refines(CoxeterType t, const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> parse(std::string_view text);
std::string to_string(const std::vector<int>& parts);

}  // namespace codec

/// c_{ij}^k with e_i·e_j = Σ_k c_{ij}^k e_k.
class StructureTable {
 public:
  StructureTable(std::string name, std::vector<std::string> labels);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t dim() const { return labels_.size(); }

  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim() + j) * dim() + k]; }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim() + j) * dim() + k]; }
  std::vector<Rational> cell(std::size_t i, std::size_t j) const;

  bool all_nonnegative_integers() const;
  bool commutative() const;

  std::string to_csv() const;
  nlohmann::json to_json() const;
  std::string to_pretty() const;

  bool operator==(const StructureTable&) const = default;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Rational> c_;
};

/// Products of every ordered pair of basis elements expressed in that basis.
/// Throws NotInSpanError naming the first pair whose product leaves the span.
StructureTable structure_constants(const Basis& basis);
StructureTable structure_constants(CoxeterType t, int n, DescentKind kind);

/// Renders a coordinate tuple as "(2,1,2)".
std::string tuple_text(const std::vector<Rational>& coords);

}  // namespace peakalg
