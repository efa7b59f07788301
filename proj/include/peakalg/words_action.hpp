#pragma once

// Right action of QS_n and QB_n on length-n tensor words over an alphabet with an
// involution, the symmetrizer τ and the Jordan bracket [s,t] = st + ts.

#include <map>
#include <string>
#include <vector>

#include "peakalg/group_algebra.hpp"
#include "peakalg/report.hpp"

namespace peakalg {

using Word = std::vector<int>;  // letter indices

class Alphabet {
 public:
  /// Throws std::invalid_argument unless involution is a self-inverse map on the letters.
  Alphabet(std::vector<std::string> letters, std::vector<int> involution);
  /// a, b, c, ... each fixed by the involution.
  static Alphabet trivial(int size);
  /// a, ā, b, c, ...: the first two letters are swapped, the rest fixed. size >= 2.
  static Alphabet paired(int size);

  int size() const { return static_cast<int>(letters_.size()); }
  const std::string& name(int letter) const { return letters_.at(letter); }
  int bar(int letter) const { return involution_.at(letter); }
  bool is_trivial() const;
  /// All words of the given length in lexicographic order.
  std::vector<Word> words(int length) const;
  std::string spell(const Word& w) const;

 private:
  std::vector<std::string> letters_;
  std::vector<int> involution_;
};

/// Homogeneous element of the tensor algebra: a finite sum of same-length words.
class TensorElem {
 public:
  explicit TensorElem(int length) : length_(length) {}
  static TensorElem word(const Word& w, const Rational& c = 1);

  int length() const { return length_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Word& w, const Rational& c);
  TensorElem& operator+=(const TensorElem& o);
  TensorElem& operator*=(const Rational& c);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator*(const Rational& c, TensorElem a) { return a *= c; }
  /// Concatenation product of the tensor algebra.
  friend TensorElem operator*(const TensorElem& a, const TensorElem& b);
  friend bool operator==(const TensorElem&, const TensorElem&) = default;

  std::string to_string(const Alphabet& alphabet) const;

 private:
  int length_;
  std::map<Word, Rational> terms_;
};

/// (y_1⊗..⊗y_n)·w = y_{w_1}⊗..⊗y_{w_n}, with the involution applied where w_i < 0.
/// Throws std::invalid_argument on a length mismatch.
TensorElem act(const TensorElem& t, const SignedPerm& w, const Alphabet& alphabet);
/// Linear extension to QS_n and QB_n (type D elements are read inside QB_n).
TensorElem act(const TensorElem& t, const AlgElem& a, const Alphabet& alphabet);

/// τ(y_1⊗..⊗y_n) = y_1⊗..⊗y_n + ȳ_n⊗..⊗ȳ_1.
TensorElem symmetrizer(const TensorElem& t, const Alphabet& alphabet);
TensorElem jordan_bracket(const TensorElem& s, const TensorElem& t);

/// τ(..τ(τ(y_1)y_2)..y_n) and [[..[y_1,y_2],..],y_n] for a non-empty word.
TensorElem nested_symmetrizer(const Word& w, const Alphabet& alphabet);
TensorElem nested_bracket(const Word& w);

/// Σ over ways to split the positions into a p-set S and its complement of
/// (t_S·u)(t_{S^c}·v): the convolution of the actions of u ∈ B_p and v ∈ B_q.
TensorElem convolution_action(const TensorElem& t, const AlgElem& u, const AlgElem& v, const Alphabet& alphabet);

/// For every word of length n: the action of X⁰_(n), and for a trivial involution the
/// action of P°_(n) and η_n = 2θ_n; the convolution law for degrees p + q = n <= 4.
void verify_action_identities(int n, const Alphabet& alphabet, VerifyReport& report);
/// Right-action and internal-product homomorphism laws, exhaustive on B_n and words of length n.
void verify_action_laws(int n, const Alphabet& alphabet, VerifyReport& report);

}  // namespace peakalg
