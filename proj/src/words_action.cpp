#include "peakalg/words_action.hpp"

#include <bit>
#include <stdexcept>

#include "peakalg/descent_bases.hpp"
#include "peakalg/hopf_external.hpp"
#include "peakalg/mantaci_reutenauer.hpp"
#include "peakalg/peak_algebra.hpp"

namespace peakalg {

Alphabet::Alphabet(std::vector<std::string> letters, std::vector<int> involution)
    : letters_(std::move(letters)), involution_(std::move(involution)) {
  if (letters_.empty()) throw std::invalid_argument("an alphabet needs at least one letter");
  if (involution_.size() != letters_.size()) throw std::invalid_argument("involution table has the wrong size");
  for (std::size_t i = 0; i < involution_.size(); ++i) {
    const int j = involution_[i];
    if (j < 0 || j >= size()) throw std::invalid_argument("involution leaves the alphabet");
    if (involution_[j] != static_cast<int>(i)) throw std::invalid_argument("involution is not self-inverse at " + letters_[i]);
  }
}

Alphabet Alphabet::trivial(int size) {
  if (size < 1 || size > 26) throw std::invalid_argument("alphabet size must be in 1..26");
  std::vector<std::string> names;
  std::vector<int> inv;
  for (int i = 0; i < size; ++i) {
    names.emplace_back(1, static_cast<char>('a' + i));
    inv.push_back(i);
  }
  return {names, inv};
}

Alphabet Alphabet::paired(int size) {
  if (size < 2 || size > 26) throw std::invalid_argument("a paired alphabet needs 2..26 letters");
  std::vector<std::string> names{"a", "ā"};
  std::vector<int> inv{1, 0};
  for (int i = 2; i < size; ++i) {
    names.emplace_back(1, static_cast<char>('a' + i - 1));
    inv.push_back(i);
  }
  return {names, inv};
}

bool Alphabet::is_trivial() const {
  for (int i = 0; i < size(); ++i)
    if (involution_[i] != i) return false;
  return true;
}

std::vector<Word> Alphabet::words(int length) const {
  std::vector<Word> out;
  Word w(length, 0);
  while (true) {
    out.push_back(w);
    int i = length - 1;
    while (i >= 0 && w[i] == size() - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

std::string Alphabet::spell(const Word& w) const {
  if (w.empty()) return "ε";
  std::string out;
  for (int x : w) out += name(x);
  return out;
}

TensorElem TensorElem::word(const Word& w, const Rational& c) {
  TensorElem t(static_cast<int>(w.size()));
  t.add(w, c);
  return t;
}

void TensorElem::add(const Word& w, const Rational& c) {
  if (static_cast<int>(w.size()) != length_) throw std::invalid_argument("word length differs from the tensor degree");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  if (o.length_ != length_) throw std::invalid_argument("adding tensors of different lengths");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

TensorElem& TensorElem::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, v] : terms_) v *= c;
  return *this;
}

TensorElem operator*(const TensorElem& a, const TensorElem& b) {
  TensorElem out(a.length_ + b.length_);
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, c * d);
    }
  return out;
}

std::string TensorElem::to_string(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += peakalg::to_string(c) + "·";
    out += alphabet.spell(w);
  }
  return out;
}

namespace {

Word act_word(const Word& y, const SignedPerm& w, const Alphabet& alphabet) {
  Word out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const int v = w.value(static_cast<int>(i));
    out[i] = v > 0 ? y[v - 1] : alphabet.bar(y[-v - 1]);
  }
  return out;
}

}  // namespace

TensorElem act(const TensorElem& t, const SignedPerm& w, const Alphabet& alphabet) {
  if (w.rank() != t.length()) throw std::invalid_argument("permutation rank differs from the word length");
  TensorElem out(t.length());
  for (const auto& [y, c] : t.terms()) out.add(act_word(y, w, alphabet), c);
  return out;
}

TensorElem act(const TensorElem& t, const AlgElem& a, const Alphabet& alphabet) {
  if (a.rank() != t.length()) throw std::invalid_argument("group rank differs from the word length");
  TensorElem out(t.length());
  for (const auto& term : a.terms()) {
    const SignedPerm& w = a.group().element(term.key);
    for (const auto& [y, c] : t.terms()) out.add(act_word(y, w, alphabet), term.coeff * c);
  }
  return out;
}

TensorElem symmetrizer(const TensorElem& t, const Alphabet& alphabet) {
  TensorElem out = t;
  for (const auto& [y, c] : t.terms()) {
    Word r(y.rbegin(), y.rend());
    for (int& x : r) x = alphabet.bar(x);
    out.add(r, c);
  }
  return out;
}

TensorElem jordan_bracket(const TensorElem& s, const TensorElem& t) { return s * t + t * s; }

TensorElem nested_symmetrizer(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) throw std::invalid_argument("nested τ needs a non-empty word");
  TensorElem acc = symmetrizer(TensorElem::word({w[0]}), alphabet);
  for (std::size_t i = 1; i < w.size(); ++i) acc = symmetrizer(acc * TensorElem::word({w[i]}), alphabet);
  return acc;
}

TensorElem nested_bracket(const Word& w) {
  if (w.empty()) throw std::invalid_argument("nested bracket needs a non-empty word");
  TensorElem acc = TensorElem::word({w[0]});
  for (std::size_t i = 1; i < w.size(); ++i) acc = jordan_bracket(acc, TensorElem::word({w[i]}));
  return acc;
}

TensorElem convolution_action(const TensorElem& t, const AlgElem& u, const AlgElem& v, const Alphabet& alphabet) {
  const int p = u.rank(), q = v.rank(), n = p + q;
  if (n != t.length()) throw std::invalid_argument("degrees do not add up to the word length");
  TensorElem out(n);
  for (const auto& [y, c] : t.terms())
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
      if (std::popcount(m) != p) continue;
      Word in, rest;
      for (int i = 0; i < n; ++i) (m >> i & 1U ? in : rest).push_back(y[i]);
      out += c * (act(TensorElem::word(in), u, alphabet) * act(TensorElem::word(rest), v, alphabet));
    }
  return out;
}

namespace {
std::string nstr(int n) { return "n=" + std::to_string(n); }
}  // namespace

void verify_action_identities(int n, const Alphabet& alphabet, VerifyReport& report) {
  if (n < 1 || n > 5) throw std::invalid_argument("word checks take 1 <= n <= 5");
  if (alphabet.size() > 4) throw std::invalid_argument("word checks take at most 4 letters");
  const std::string tag = (alphabet.is_trivial() ? "trivial." : "involutive.") + nstr(n);
  const auto words = alphabet.words(n);

  report.check("words.action-B." + tag, [&] {
    const AlgElem x0 = x0_of({n});
    for (const auto& w : words)
      if (act(TensorElem::word(w), x0, alphabet) != nested_symmetrizer(w, alphabet))
        return Outcome::fail("t·X⁰_(n) differs from nested τ at " + alphabet.spell(w));
    return Outcome::pass(std::to_string(words.size()) + " words");
  });
  if (alphabet.is_trivial()) {
    report.check("words.action-P." + tag, [&] {
      const AlgElem p0 = interior_peak_basis(n, PeakIndex(n, 0, true));
      for (const auto& w : words)
        if (act(TensorElem::word(w), p0, alphabet) != nested_bracket(w))
          return Outcome::fail("t·P°_(n) differs from the nested bracket at " + alphabet.spell(w));
      return Outcome::pass(std::to_string(words.size()) + " words");
    });
    report.check("words.eta-twice-theta." + tag, [&] {
      for (const auto& w : words)
        if (nested_symmetrizer(w, alphabet) != Rational(2) * nested_bracket(w))
          return Outcome::fail("η_n ≠ 2θ_n at " + alphabet.spell(w));
      return Outcome::pass();
    });
  }
  if (n <= 4)
    report.check("words.convolution." + tag, [&] {
      for (int p = 1; p < n; ++p) {
        const int q = n - p;
        for (const auto& u : Group::get(CoxeterType::B, p).elements())
          for (const auto& v : Group::get(CoxeterType::B, q).elements()) {
            const AlgElem a = AlgElem::single(CoxeterType::B, u), b = AlgElem::single(CoxeterType::B, v);
            const AlgElem prod = external_product(a, b);
            for (const auto& w : words) {
              const TensorElem t = TensorElem::word(w);
              if (act(t, prod, alphabet) != convolution_action(t, a, b, alphabet))
                return Outcome::fail("action of " + u.to_string() + " ∗ " + v.to_string() +
                                     " is not the convolution at " + alphabet.spell(w));
            }
          }
      }
      return Outcome::pass();
    });
}

void verify_action_laws(int n, const Alphabet& alphabet, VerifyReport& report) {
  const std::string tag = (alphabet.is_trivial() ? "trivial." : "involutive.") + nstr(n);
  const auto& elems = Group::get(CoxeterType::B, n).elements();
  const auto words = alphabet.words(n);
  report.check("words.right-action." + tag, [&] {
    for (const auto& w : words) {
      const TensorElem t = TensorElem::word(w);
      if (act(t, SignedPerm::identity(n), alphabet) != t) return Outcome::fail("identity moves " + alphabet.spell(w));
      for (const auto& u : elems) {
        const TensorElem tu = act(t, u, alphabet);
        for (const auto& v : elems)
          if (act(tu, v, alphabet) != act(t, compose(u, v), alphabet))
            return Outcome::fail("(t·u)·v ≠ t·(uv) for t=" + alphabet.spell(w) + ", u=" + u.to_string() +
                                 ", v=" + v.to_string());
      }
    }
    return Outcome::pass();
  });
  report.check("words.homomorphism." + tag, [&] {
    // On the Y basis of Σ(B_n): t·(ab) = (t·a)·b, and t·(a+b) = t·a + t·b.
    const Basis& y = descent_basis(CoxeterType::B, n, DescentKind::Y);
    for (const auto& w : words) {
      const TensorElem t = TensorElem::word(w);
      for (std::size_t i = 0; i < y.size(); ++i) {
        const TensorElem ta = act(t, y[i], alphabet);
        for (std::size_t j = 0; j < y.size(); ++j) {
          if (act(t, internal_product(y[i], y[j]), alphabet) != act(ta, y[j], alphabet))
            return Outcome::fail("t·(ab) ≠ (t·a)·b for " + y.labels()[i] + ", " + y.labels()[j] + " at " + alphabet.spell(w));
          if (act(t, y[i] + y[j], alphabet) != ta + act(t, y[j], alphabet))
            return Outcome::fail("action not additive at " + alphabet.spell(w));
        }
      }
    }
    return Outcome::pass();
  });
}

}  // namespace peakalg
