#include "peakalg/hopf_external.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "peakalg/descent_bases.hpp"
#include "peakalg/errors.hpp"
#include "peakalg/mantaci_reutenauer.hpp"
#include "peakalg/morphisms.hpp"
#include "peakalg/peak_algebra.hpp"

namespace peakalg {

const char* family_name(Family f) {
  switch (f) {
    case Family::QS: return "QS";
    case Family::QB: return "QB";
    case Family::SolA: return "SolA";
    case Family::SolB: return "SolB";
    case Family::OmegaB: return "OmegaB";
    case Family::Peak: return "Peak";
    case Family::PeakIdeal: return "PeakIdeal";
    case Family::I0: return "I0";
  }
  return "?";
}

CoxeterType family_type(Family f) {
  switch (f) {
    case Family::QS:
    case Family::SolA:
    case Family::Peak:
    case Family::PeakIdeal: return CoxeterType::A;
    default: return CoxeterType::B;
  }
}

namespace {

const Basis& unit_basis(CoxeterType t) {
  static const Basis a("unit", CoxeterType::A, 0, {"1"}, {AlgElem::identity(CoxeterType::A, 0)});
  static const Basis b("unit", CoxeterType::B, 0, {"1"}, {AlgElem::identity(CoxeterType::B, 0)});
  return t == CoxeterType::A ? a : b;
}

const Basis& i0_basis(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Basis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    std::vector<std::string> labels;
    std::vector<AlgElem> elems;
    for (const auto& j : all_generator_sets(CoxeterType::B, n)) {
      if (j.contains(0)) continue;
      labels.push_back("Y⁰" + j.to_string());
      elems.push_back(y0_basis(n, j));
    }
    slot = std::make_unique<Basis>("I0_" + std::to_string(n), CoxeterType::B, n, std::move(labels), std::move(elems));
  }
  return *slot;
}

int abs_int(int v) { return v < 0 ? -v : v; }

}  // namespace

const Basis& family_basis(Family f, int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (f == Family::QS || f == Family::QB)
    throw std::invalid_argument(std::string(family_name(f)) + " is the whole group algebra and has no stored basis");
  if (n == 0) return unit_basis(family_type(f));
  switch (f) {
    case Family::SolA: return descent_basis(CoxeterType::A, n, DescentKind::Y);
    case Family::SolB: return descent_basis(CoxeterType::B, n, DescentKind::Y);
    case Family::OmegaB: return omega_basis(n, MRKind::T);
    case Family::Peak: return peak_algebra_basis(n);
    case Family::PeakIdeal: return peak_ideal_basis(n);
    case Family::I0: return i0_basis(n);
    default: break;
  }
  throw std::logic_error("unhandled family");
}

bool family_contains(Family f, const AlgElem& a) {
  if (a.type() != family_type(f)) return false;
  if (f == Family::QS || f == Family::QB) return true;
  return family_basis(f, a.rank()).span().contains(a);
}

GradedElem GradedElem::homogeneous(Family f, const AlgElem& a) {
  if (a.type() != family_type(f)) throw std::invalid_argument("element type does not match the family");
  GradedElem g;
  g.family = f;
  if (!a.is_zero()) g.parts.emplace(a.rank(), a);
  return g;
}

void GradedElem::validate() const {
  for (const auto& [deg, part] : parts) {
    if (part.rank() != deg) throw std::invalid_argument("component stored under the wrong degree");
    if (!family_contains(family, part))
      throw DomainError("degree " + std::to_string(deg) + " component is not in " + family_name(family));
  }
}

// ---------------------------------------------------------------------------------------
// Tensor2

Tensor2 Tensor2::of(const AlgElem& a, const AlgElem& b) {
  if (a.type() != b.type()) throw std::invalid_argument("tensor factors of different types");
  Tensor2 t(a.type());
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) t.add(a.rank(), b.rank(), x.key, y.key, x.coeff * y.coeff);
  return t;
}

std::size_t Tensor2::term_count() const {
  std::size_t c = 0;
  for (const auto& [_, e] : parts_) c += e.size();
  return c;
}

void Tensor2::add(int p, int q, std::uint32_t left, std::uint32_t right, const Rational& c) {
  if (sgn(c) == 0) return;
  auto& block = parts_[{p, q}];
  auto [it, inserted] = block.emplace(std::make_pair(left, right), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) block.erase(it);
  }
  if (block.empty()) parts_.erase({p, q});
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  if (o.type_ != type_) throw std::invalid_argument("adding tensors of different types");
  for (const auto& [deg, entries] : o.parts_)
    for (const auto& [keys, c] : entries) add(deg.first, deg.second, keys.first, keys.second, c);
  return *this;
}

std::string Tensor2::to_string(std::size_t max_terms) const {
  if (parts_.empty()) return "0";
  std::string out;
  std::size_t shown = 0;
  for (const auto& [deg, entries] : parts_) {
    const Group& gl = Group::get(type_, deg.first);
    const Group& gr = Group::get(type_, deg.second);
    for (const auto& [keys, c] : entries) {
      if (shown == max_terms) return out + " + ...";
      if (shown++) out += " + ";
      out += peakalg::to_string(c) + "·[" + gl.element(keys.first).to_string() + "]⊗[" +
             gr.element(keys.second).to_string() + "]";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------------------
// Shuffles and the coset factorization

SignedPerm block(const SignedPerm& u, const SignedPerm& v) {
  const int p = u.rank();
  std::vector<int> vals;
  vals.reserve(p + v.rank());
  for (int i = 0; i < p; ++i) vals.push_back(u.value(i));
  for (int i = 0; i < v.rank(); ++i) vals.push_back(v.value(i) > 0 ? v.value(i) + p : v.value(i) - p);
  return SignedPerm(vals);
}

std::vector<SignedPerm> shuffles(int p, int q) {
  const int n = p + q;
  std::vector<SignedPerm> out;
  std::vector<int> vals(n);
  // Masks in increasing order give the first block in colex order; sort afterwards.
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (std::popcount(m) != p) continue;
    int a = 0, b = p;
    for (int i = 0; i < n; ++i) (m >> i & 1U ? vals[a++] : vals[b++]) = i + 1;
    out.emplace_back(vals);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Split split_at(const SignedPerm& w, int p) {
  const int n = w.rank();
  if (p < 0 || p > n) throw std::invalid_argument("split degree out of range");
  std::vector<int> left, right, small_pos, large_pos;
  for (int i = 0; i < n; ++i) {
    const int v = w.value(i);
    if (abs_int(v) <= p) {
      left.push_back(v);
      small_pos.push_back(i + 1);
    } else {
      right.push_back(v > 0 ? v - p : v + p);
      large_pos.push_back(i + 1);
    }
  }
  small_pos.insert(small_pos.end(), large_pos.begin(), large_pos.end());
  return {SignedPerm(left), SignedPerm(right), SignedPerm(small_pos)};
}

AlgElem external_product(const AlgElem& u, const AlgElem& v) {
  if (u.type() != v.type()) throw std::invalid_argument("external product of different types");
  const CoxeterType t = u.type();
  if (t == CoxeterType::D) throw std::invalid_argument("the external product is defined for types A and B");
  const int p = u.rank(), q = v.rank(), n = p + q;
  const Group& g = Group::get(t, n);
  const Group& gu = Group::get(t, p);
  const Group& gv = Group::get(t, q);

  // Value sets S (for u) and their complements, one per shuffle.
  std::vector<std::array<std::int8_t, kMaxRank>> first, second;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (std::popcount(m) != p) continue;
    std::array<std::int8_t, kMaxRank> s{}, c{};
    int a = 0, b = 0;
    for (int i = 0; i < n; ++i) (m >> i & 1U ? s[a++] : c[b++]) = static_cast<std::int8_t>(i + 1);
    first.push_back(s);
    second.push_back(c);
  }

  std::vector<AlgElem::Term> terms;
  terms.reserve(u.support_size() * v.support_size() * first.size());
  std::vector<int> vals(n);
  for (const auto& tu : u.terms()) {
    const SignedPerm& a = gu.element(tu.key);
    for (const auto& tv : v.terms()) {
      const SignedPerm& b = gv.element(tv.key);
      const Rational c = tu.coeff * tv.coeff;
      for (std::size_t s = 0; s < first.size(); ++s) {
        for (int i = 0; i < p; ++i) {
          const int x = a.value(i);
          vals[i] = x > 0 ? first[s][x - 1] : -first[s][-x - 1];
        }
        for (int i = 0; i < q; ++i) {
          const int x = b.value(i);
          vals[p + i] = x > 0 ? second[s][x - 1] : -second[s][-x - 1];
        }
        terms.push_back({g.key(SignedPerm(vals)), c});
      }
    }
  }
  return AlgElem::from_terms(t, n, std::move(terms));
}

namespace {

Family product_family(Family a, Family b) {
  if (a == b && a != Family::SolB && a != Family::Peak) return a;
  if (a == Family::SolB && (b == Family::I0 || b == Family::SolB)) return Family::SolB;
  if (a == Family::Peak && b == Family::PeakIdeal) return Family::Peak;
  return family_type(a) == CoxeterType::A ? Family::QS : Family::QB;
}

}  // namespace

GradedElem external_product(const GradedElem& a, const GradedElem& b) {
  if (a.type() != b.type()) throw std::invalid_argument("external product of different types");
  GradedElem out;
  out.family = product_family(a.family, b.family);
  for (const auto& [p, x] : a.parts)
    for (const auto& [q, y] : b.parts) {
      AlgElem prod = external_product(x, y);
      auto it = out.parts.find(p + q);
      if (it == out.parts.end())
        out.parts.emplace(p + q, std::move(prod));
      else
        it->second += prod;
    }
  std::erase_if(out.parts, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Tensor2 coproduct(const AlgElem& a) {
  const CoxeterType t = a.type();
  if (t == CoxeterType::D) throw std::invalid_argument("the coproduct is defined for types A and B");
  const int n = a.rank();
  Tensor2 out(t);
  for (const auto& term : a.terms()) {
    const SignedPerm& w = a.group().element(term.key);
    for (int p = 0; p <= n; ++p) {
      const Split s = split_at(w, p);
      out.add(p, n - p, Group::get(t, p).key(s.left), Group::get(t, n - p).key(s.right), term.coeff);
    }
  }
  return out;
}

Tensor2 coproduct(const GradedElem& a) {
  Tensor2 out(a.type());
  for (const auto& [deg, part] : a.parts) out += coproduct(part);
  return out;
}

Rational counit(const GradedElem& a) {
  auto it = a.parts.find(0);
  return it == a.parts.end() ? Rational(0) : it->second.coeff_of_key(0);
}

Tensor2 internal_product(const Tensor2& s, const Tensor2& t) {
  if (s.type() != t.type()) throw std::invalid_argument("tensor product of different types");
  Tensor2 out(s.type());
  for (const auto& [deg, es] : s.parts()) {
    auto it = t.parts().find(deg);
    if (it == t.parts().end()) continue;
    const Group& gl = Group::get(s.type(), deg.first);
    const Group& gr = Group::get(s.type(), deg.second);
    for (const auto& [k1, c1] : es)
      for (const auto& [k2, c2] : it->second)
        out.add(deg.first, deg.second, gl.product_key(gl.element(k1.first), gl.element(k2.first)),
                gr.product_key(gr.element(k1.second), gr.element(k2.second)), c1 * c2);
  }
  return out;
}

namespace {

/// Groups a block by one factor: side 0 collects columns (fixed right key), side 1 rows.
std::map<std::uint32_t, std::vector<AlgElem::Term>> slices(const Tensor2::Entries& entries, int side) {
  std::map<std::uint32_t, std::vector<AlgElem::Term>> out;
  for (const auto& [keys, c] : entries) {
    if (side == 0)
      out[keys.second].push_back({keys.first, c});
    else
      out[keys.first].push_back({keys.second, c});
  }
  return out;
}

}  // namespace

Tensor2 apply_left(const Tensor2& t, const LinearMap& f) {
  Tensor2 out(t.type());
  for (const auto& [deg, entries] : t.parts())
    for (auto& [right, terms] : slices(entries, 0)) {
      const AlgElem img = f(AlgElem::from_terms(t.type(), deg.first, terms));
      if (img.is_zero()) continue;
      if (img.type() != t.type()) throw std::invalid_argument("map changes the Coxeter type");
      for (const auto& x : img.terms()) out.add(img.rank(), deg.second, x.key, right, x.coeff);
    }
  return out;
}

Tensor2 apply_right(const Tensor2& t, const LinearMap& f) {
  Tensor2 out(t.type());
  for (const auto& [deg, entries] : t.parts())
    for (auto& [left, terms] : slices(entries, 1)) {
      const AlgElem img = f(AlgElem::from_terms(t.type(), deg.second, terms));
      if (img.is_zero()) continue;
      if (img.type() != t.type()) throw std::invalid_argument("map changes the Coxeter type");
      for (const auto& x : img.terms()) out.add(deg.first, img.rank(), left, x.key, x.coeff);
    }
  return out;
}

bool tensor_in(const Tensor2& t, Family left, Family right) {
  if (family_type(left) != t.type() || family_type(right) != t.type()) return false;
  for (const auto& [deg, entries] : t.parts()) {
    for (auto& [_, terms] : slices(entries, 0))
      if (!family_contains(left, AlgElem::from_terms(t.type(), deg.first, terms))) return false;
    for (auto& [_, terms] : slices(entries, 1))
      if (!family_contains(right, AlgElem::from_terms(t.type(), deg.second, terms))) return false;
  }
  return true;
}

std::optional<std::map<std::pair<std::size_t, std::size_t>, Rational>> tensor_coordinates(
    const Tensor2& t, int p, int q, const Basis& left, const Basis& right) {
  std::map<std::pair<std::size_t, std::size_t>, Rational> out;
  auto it = t.parts().find({p, q});
  if (it == t.parts().end()) return out;
  // c_i(r): coordinate of column r along left basis element i.
  std::map<std::size_t, std::vector<AlgElem::Term>> along;
  for (auto& [r, terms] : slices(it->second, 0)) {
    auto coords = left.span().solve(AlgElem::from_terms(t.type(), p, terms));
    if (!coords) return std::nullopt;
    for (std::size_t i = 0; i < coords->size(); ++i)
      if (sgn((*coords)[i]) != 0) along[i].push_back({r, (*coords)[i]});
  }
  for (auto& [i, terms] : along) {
    auto coords = right.span().solve(AlgElem::from_terms(t.type(), q, terms));
    if (!coords) return std::nullopt;
    for (std::size_t j = 0; j < coords->size(); ++j)
      if (sgn((*coords)[j]) != 0) out[{i, j}] = (*coords)[j];
  }
  return out;
}

// ---------------------------------------------------------------------------------------
// η, β and the graded maps

Rational eta(const AlgElem& a) {
  if (a.type() != CoxeterType::B || a.rank() != 1) return 0;
  return a.coeff(SignedPerm{1}) - a.coeff(SignedPerm{-1});
}

AlgElem beta_via_coproduct(const AlgElem& a) {
  if (a.type() != CoxeterType::B) throw DomainError("β is defined on Σ(B)");
  const int n = a.rank();
  if (n == 0) return AlgElem(CoxeterType::B, 0);
  const Group& g = Group::get(CoxeterType::B, n - 1);
  std::vector<AlgElem::Term> terms;
  for (const auto& t : a.terms()) {
    const Split s = split_at(a.group().element(t.key), 1);
    terms.push_back({g.key(s.right), s.left.value(0) > 0 ? t.coeff : Rational(-t.coeff)});
  }
  return AlgElem::from_terms(CoxeterType::B, n - 1, std::move(terms));
}

AlgElem theta_graded(const AlgElem& a) { return a.rank() == 0 ? a : theta(a); }
AlgElem theta_pm_graded(const AlgElem& a) { return a.rank() == 0 ? a : theta_pm(a); }
AlgElem beta_graded(const AlgElem& a) { return a.rank() == 0 ? AlgElem(CoxeterType::B, 0) : beta_map(a); }
AlgElem pi_graded(const AlgElem& a) { return a.rank() < 2 ? AlgElem(CoxeterType::A, 0) : pi_map(a); }

// ---------------------------------------------------------------------------------------
// Named elements

namespace {
int total(const std::vector<int>& parts) {
  int n = 0;
  for (int a : parts) n += abs_int(a);
  return n;
}
}  // namespace

AlgElem x_a(const std::vector<int>& alpha) {
  if (alpha.empty()) return AlgElem::identity(CoxeterType::A, 0);
  const auto j = codec::from_composition(CoxeterType::A, alpha);
  return x_basis(CoxeterType::A, j.rank(), j);
}

AlgElem x_b(const std::vector<int>& pseudo) {
  if (total(pseudo) == 0) return AlgElem::identity(CoxeterType::B, 0);
  const auto j = codec::from_composition(CoxeterType::B, pseudo);
  return x_basis(CoxeterType::B, j.rank(), j);
}

AlgElem x0_b(const std::vector<int>& alpha) {
  if (alpha.empty()) return AlgElem::identity(CoxeterType::B, 0);
  return x0_of(alpha);
}

AlgElem stilde(const std::vector<int>& signed_alpha) {
  if (signed_alpha.empty()) return AlgElem::identity(CoxeterType::B, 0);
  return mr_basis(MRKind::STilde, SignedComposition(signed_alpha));
}

std::vector<std::vector<int>> compositions(int n) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (const auto& j : all_generator_sets(CoxeterType::A, n)) out.push_back(codec::to_composition(j));
  return out;
}

AlgElem peak_product_witness() {
  const AlgElem p1 = peak_basis(2, PeakIndex::of(2, {1}));
  return external_product(p1, p1);
}

// ---------------------------------------------------------------------------------------
// Checks

namespace {

std::string nstr(int n) { return "n=" + std::to_string(n); }

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// All pseudo compositions (a_0, a_1, .., a_k) of n: a_0 >= 0, the rest positive.
std::vector<std::vector<int>> pseudo_compositions(int n) {
  std::vector<std::vector<int>> out;
  for (int a0 = 0; a0 <= n; ++a0)
    for (const auto& rest : compositions(n - a0)) {
      if (a0 == 0 && n > 0 && rest.empty()) continue;
      out.push_back(concat({a0}, rest));
    }
  return out;
}

std::vector<std::vector<int>> signed_compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) return {{}};
  for (const auto& s : all_signed_compositions(n)) out.push_back(s.parts());
  return out;
}

/// Σ_{i+j=n} e(i) ⊗ e(j).
Tensor2 split_sum(CoxeterType t, int n, const std::function<AlgElem(int)>& e) {
  Tensor2 out(t);
  for (int i = 0; i <= n; ++i) out += Tensor2::of(e(i), e(n - i));
  return out;
}

/// Runs body(p, q) for every p + q = n with both degrees at least lo.
template <class F>
Outcome for_splits(int n, int lo, F body) {
  for (int p = lo; p <= n - lo; ++p) {
    Outcome o = body(p, n - p);
    if (!o.ok) return o;
  }
  return Outcome::pass();
}

std::string ctext(const std::vector<int>& c) { return codec::to_string(c); }

Outcome product_relation(const std::string& what, int n,
                         const std::function<std::vector<std::vector<int>>(int)>& left_index,
                         const std::function<std::vector<std::vector<int>>(int)>& right_index,
                         const std::function<AlgElem(const std::vector<int>&)>& left,
                         const std::function<AlgElem(const std::vector<int>&)>& right,
                         const std::function<AlgElem(const std::vector<int>&)>& joined, int left_min) {
  return for_splits(n, 0, [&](int p, int q) {
    if (p < left_min || q < 1) return Outcome::pass();
    for (const auto& a : left_index(p)) {
      const AlgElem x = left(a);
      for (const auto& b : right_index(q))
        if (external_product(x, right(b)) != joined(concat(a, b)))
          return Outcome::fail(what + " fails for " + ctext(a) + " and " + ctext(b));
    }
    return Outcome::pass();
  });
}

}  // namespace

void verify_hopf_laws(int max_degree, VerifyReport& report) {
  if (max_degree > 6) throw std::invalid_argument("Hopf checks stop at degree 6");
  for (int n = 0; n <= max_degree; ++n) {
    const auto& elems = Group::get(CoxeterType::B, n).elements();
    report.check("hopf.split-reassembles." + nstr(n), [&] {
      for (const auto& w : elems)
        for (int p = 0; p <= n; ++p) {
          const Split s = split_at(w, p);
          for (int i = 1; i < n; ++i)
            if (i != p && s.shuffle.value(i - 1) > s.shuffle.value(i))
              return Outcome::fail("ξ not a shuffle for " + w.to_string() + " at p=" + std::to_string(p));
          if (compose(w, s.shuffle) != block(s.left, s.right) || compose(block(s.left, s.right), s.shuffle.inverse()) != w)
            return Outcome::fail("w ≠ (w_(p)×w'_(p))·ξ^{-1} for w=" + w.to_string() + ", p=" + std::to_string(p));
        }
      return Outcome::pass(std::to_string(elems.size()) + " elements");
    });
    report.check("hopf.coassociative." + nstr(n), [&] {
      using Triple = std::array<SignedPerm, 3>;
      for (const auto& w : elems) {
        std::vector<Triple> lhs, rhs;
        for (int p = 0; p <= n; ++p) {
          const Split s = split_at(w, p);
          for (int r = 0; r <= p; ++r) {
            const Split t = split_at(s.left, r);
            lhs.push_back({t.left, t.right, s.right});
          }
          for (int r = 0; r <= n - p; ++r) {
            const Split t = split_at(s.right, r);
            rhs.push_back({s.left, t.left, t.right});
          }
        }
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        if (lhs != rhs) return Outcome::fail("(Δ⊗id)Δ ≠ (id⊗Δ)Δ at " + w.to_string());
      }
      return Outcome::pass();
    });
    report.check("hopf.counit." + nstr(n), [&] {
      for (const auto& w : elems) {
        const Tensor2 d = coproduct(AlgElem::single(CoxeterType::B, w));
        // (ε⊗id)Δ keeps bidegree (0,n); (id⊗ε)Δ keeps (n,0).
        Tensor2 lhs(CoxeterType::B), rhs(CoxeterType::B);
        for (const auto& [deg, entries] : d.parts())
          for (const auto& [k, c] : entries) {
            if (deg.first == 0) lhs.add(0, n, 0, k.second, c);
            if (deg.second == 0) rhs.add(n, 0, k.first, 0, c);
          }
        const std::uint32_t key = Group::get(CoxeterType::B, n).key(w);
        Tensor2 want_l(CoxeterType::B), want_r(CoxeterType::B);
        want_l.add(0, n, 0, key, 1);
        want_r.add(n, 0, key, 0, 1);
        if (lhs != want_l || rhs != want_r) return Outcome::fail("counit law fails at " + w.to_string());
      }
      return Outcome::pass();
    });
    report.check("hopf.shuffle-multiplicity." + nstr(n), [&] {
      for (CoxeterType t : {CoxeterType::A, CoxeterType::B}) {
        Outcome o = for_splits(n, 0, [&](int p, int q) {
          const auto want = static_cast<std::size_t>(binomial(n, p).get_ui());
          for (const auto& u : Group::get(t, p).elements())
            for (const auto& v : Group::get(t, q).elements()) {
              const AlgElem prod = external_product(AlgElem::single(t, u), AlgElem::single(t, v));
              if (prod.support_size() != want)
                return Outcome::fail(u.to_string() + " ∗ " + v.to_string() + " has " +
                                     std::to_string(prod.support_size()) + " terms");
              for (const auto& term : prod.terms())
                if (term.coeff != 1) return Outcome::fail(u.to_string() + " ∗ " + v.to_string() + " repeats a term");
            }
          return Outcome::pass();
        });
        if (!o.ok) return o;
      }
      return Outcome::pass();
    });
    if (n >= 3)
      report.check("hopf.associative." + nstr(n), [&] {
        const std::vector<CoxeterType> types =
            n <= 5 ? std::vector{CoxeterType::A, CoxeterType::B} : std::vector{CoxeterType::A};
        for (CoxeterType t : types)
          for (int p = 1; p <= n - 2; ++p)
            for (int q = 1; p + q <= n - 1; ++q) {
              const int r = n - p - q;
              for (const auto& u : Group::get(t, p).elements())
                for (const auto& v : Group::get(t, q).elements()) {
                  const AlgElem a = AlgElem::single(t, u), b = AlgElem::single(t, v);
                  const AlgElem ab = external_product(a, b);
                  for (const auto& w : Group::get(t, r).elements()) {
                    const AlgElem c = AlgElem::single(t, w);
                    if (external_product(ab, c) != external_product(a, external_product(b, c)))
                      return Outcome::fail("(u∗v)∗w ≠ u∗(v∗w) for " + u.to_string() + " | " + v.to_string() + " | " +
                                           w.to_string());
                  }
                }
            }
        return Outcome::pass();
      });
    if (n <= 5)
      report.check("hopf.internal-coproduct." + nstr(n), [&] {
        const Basis& y = family_basis(Family::SolA, n);
        std::vector<Tensor2> deltas;
        for (const auto& e : y.elements()) deltas.push_back(coproduct(e));
        for (std::size_t i = 0; i < y.size(); ++i)
          for (std::size_t j = 0; j < y.size(); ++j)
            if (coproduct(internal_product(y[i], y[j])) != internal_product(deltas[i], deltas[j]))
              return Outcome::fail("Δ(ab) ≠ Δ(a)Δ(b) for " + y.labels()[i] + ", " + y.labels()[j]);
        return Outcome::pass();
      });
  }
}

void verify_hopf_relations(int max_degree, VerifyReport& report) {
  if (max_degree > 6) throw std::invalid_argument("Hopf checks stop at degree 6");
  const auto comps = [](int n) { return compositions(n); };
  for (int n = 1; n <= max_degree; ++n) {
    const std::string tag = nstr(n);
    report.check("hopf.rel.prodSolA." + tag, [&] {
      return product_relation("X_α∗X_β = X_αβ", n, comps, comps, x_a, x_a, x_a, 1);
    });
    report.check("hopf.rel.coprodSolA." + tag, [&] {
      const Tensor2 want = split_sum(CoxeterType::A, n, [](int i) { return x_a(i ? std::vector{i} : std::vector<int>{}); });
      const Tensor2 got = coproduct(x_a({n}));
      return got == want ? Outcome::pass() : Outcome::fail("Δ(X_(n)) = " + got.to_string());
    });
    report.check("hopf.rel.prodOmeB." + tag, [&] {
      return product_relation("S̃_α∗S̃_β = S̃_αβ", n, signed_compositions, signed_compositions, stilde, stilde,
                              stilde, 1);
    });
    report.check("hopf.rel.coprodOmeB." + tag, [&] {
      for (int sign : {1, -1}) {
        const Tensor2 want = split_sum(CoxeterType::B, n, [sign](int i) {
          return stilde(i ? std::vector{sign * i} : std::vector<int>{});
        });
        const Tensor2 got = coproduct(stilde({sign * n}));
        if (got != want) return Outcome::fail("Δ(S̃_(" + std::to_string(sign * n) + ")) = " + got.to_string());
      }
      return Outcome::pass();
    });
    report.check("hopf.rel.prodI." + tag, [&] {
      return product_relation("X⁰_α∗X⁰_β = X⁰_αβ", n, comps, comps, x0_b, x0_b, x0_b, 1);
    });
    report.check("hopf.rel.coprodI." + tag, [&] {
      const Tensor2 want = split_sum(CoxeterType::B, n, [](int i) { return x0_b(i ? std::vector{i} : std::vector<int>{}); });
      const Tensor2 got = coproduct(x0_b({n}));
      return got == want ? Outcome::pass() : Outcome::fail("Δ(X⁰_(n)) = " + got.to_string());
    });
    report.check("hopf.rel.prodSolB." + tag, [&] {
      return product_relation("X_(a0,..)∗X⁰_β = X_(a0,..,β)", n, pseudo_compositions, comps, x_b, x0_b, x_b, 0);
    });
    report.check("hopf.rel.coprodSolB." + tag, [&] {
      const Tensor2 want = split_sum(CoxeterType::B, n, [](int i) { return x_b({i}); });
      const Tensor2 got = coproduct(x_b({n}));
      return got == want ? Outcome::pass() : Outcome::fail("Δ(X_(n)) = " + got.to_string());
    });
    report.check("hopf.rel.i0-matches-solA." + tag, [&] {
      // Δ(X_α) in the X⊗X basis and Δ(X⁰_α) in the X⁰⊗X⁰ basis have the same coordinates.
      auto make = [](int m, bool zero) {
        std::vector<std::string> labels;
        std::vector<AlgElem> elems;
        for (const auto& c : compositions(m)) {
          labels.push_back(ctext(c));
          elems.push_back(zero ? x0_b(c) : x_a(c));
        }
        return Basis("X", zero ? CoxeterType::B : CoxeterType::A, m, labels, elems);
      };
      std::vector<Basis> xa, x0;
      for (int m = 0; m <= n; ++m) {
        xa.push_back(make(m, false));
        x0.push_back(make(m, true));
      }
      for (std::size_t k = 0; k < xa[n].size(); ++k) {
        const Tensor2 da = coproduct(xa[n][k]);
        const Tensor2 d0 = coproduct(x0[n][k]);
        for (int p = 0; p <= n; ++p) {
          const auto ca = tensor_coordinates(da, p, n - p, xa[p], xa[n - p]);
          const auto c0 = tensor_coordinates(d0, p, n - p, x0[p], x0[n - p]);
          if (!ca || !c0 || *ca != *c0) return Outcome::fail("coproduct coordinates differ at " + xa[n].labels()[k]);
        }
      }
      return Outcome::pass();
    });
  }
}

void verify_hopf_structure(int max_degree, VerifyReport& report) {
  if (max_degree > 6) throw std::invalid_argument("Hopf checks stop at degree 6");
  const std::vector<Family> subalgebras{Family::SolA, Family::OmegaB, Family::I0, Family::PeakIdeal};
  const std::vector<Family> subcoalgebras{Family::SolA, Family::OmegaB, Family::I0, Family::PeakIdeal, Family::Peak,
                                          Family::SolB};

  for (int n = 1; n <= max_degree; ++n) {
    const std::string tag = nstr(n);
    for (Family f : subalgebras)
      report.check(std::string("hopf.closure.") + family_name(f) + ".product." + tag, [&] {
        return for_splits(n, 1, [&](int p, int q) {
          const Basis& a = family_basis(f, p);
          const Basis& b = family_basis(f, q);
          for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
              if (!family_contains(f, external_product(a[i], b[j])))
                return Outcome::fail(a.labels()[i] + " ∗ " + b.labels()[j] + " leaves " + family_name(f));
          return Outcome::pass();
        });
      });
    for (Family f : subcoalgebras)
      report.check(std::string("hopf.closure.") + family_name(f) + ".coproduct." + tag, [&] {
        const Basis& a = family_basis(f, n);
        for (std::size_t i = 0; i < a.size(); ++i)
          if (!tensor_in(coproduct(a[i]), f, f)) return Outcome::fail("Δ(" + a.labels()[i] + ") leaves the tensor square");
        return Outcome::pass();
      });
    for (auto [module, ring] : {std::pair{Family::SolB, Family::I0}, std::pair{Family::Peak, Family::PeakIdeal}})
      report.check(std::string("hopf.closure.") + family_name(module) + ".right-" + family_name(ring) + "." + tag, [&] {
        return for_splits(n, 0, [&](int p, int q) {
          if (q == 0) return Outcome::pass();
          const Basis& a = family_basis(module, p);
          const Basis& b = family_basis(ring, q);
          for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
              if (!family_contains(module, external_product(a[i], b[j])))
                return Outcome::fail(a.labels()[i] + " ∗ " + b.labels()[j] + " leaves " + family_name(module));
          return Outcome::pass();
        });
      });
    report.check("hopf.free-i0-module." + tag, [&] {
      std::vector<AlgElem> gens;
      for (int a0 = 0; a0 <= n; ++a0)
        for (const auto& beta : compositions(n - a0)) gens.push_back(external_product(x_b({a0}), x0_b(beta)));
      const std::size_t dim = std::size_t{1} << n;
      if (gens.size() != dim) return Outcome::fail(std::to_string(gens.size()) + " generators for dimension " + std::to_string(dim));
      for (const auto& g : gens)
        if (!family_contains(Family::SolB, g)) return Outcome::fail("a generator leaves Σ(B)");
      const std::size_t r = span_rank(gens);
      if (r != dim) return Outcome::fail("rank " + std::to_string(r) + " < " + std::to_string(dim));
      return Outcome::pass();
    });

    if (n > 5) continue;
    for (bool pm : {false, true}) {
      const Family f = pm ? Family::OmegaB : Family::SolA;
      const LinearMap map = pm ? LinearMap(theta_pm_graded) : LinearMap(theta_graded);
      const std::string name = pm ? "hopf.theta-pm." : "hopf.theta.";
      report.check(name + "product." + tag, [&] {
        return for_splits(n, 1, [&](int p, int q) {
          const Basis& a = family_basis(f, p);
          const Basis& b = family_basis(f, q);
          for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
              if (map(external_product(a[i], b[j])) != external_product(map(a[i]), map(b[j])))
                return Outcome::fail("Θ(a∗b) ≠ Θ(a)∗Θ(b) for " + a.labels()[i] + ", " + b.labels()[j]);
          return Outcome::pass();
        });
      });
      report.check(name + "coproduct." + tag, [&] {
        const Basis& a = family_basis(f, n);
        for (std::size_t i = 0; i < a.size(); ++i)
          if (coproduct(map(a[i])) != apply_right(apply_left(coproduct(a[i]), map), map))
            return Outcome::fail("ΔΘ ≠ (Θ⊗Θ)Δ at " + a.labels()[i]);
        return Outcome::pass();
      });
    }
    report.check("hopf.beta.eta-coproduct." + tag, [&] {
      for (const auto& a : pseudo_compositions(n)) {
        const AlgElem x = x_b(a);
        const AlgElem via = beta_via_coproduct(x);
        std::vector<int> shifted = a;
        const AlgElem closed = a[0] == 0 ? AlgElem(CoxeterType::B, n - 1) : (--shifted[0], x_b(shifted));
        if (via != closed || via != beta_map(x)) return Outcome::fail("(η⊗id)Δ ≠ β at X_" + ctext(a));
      }
      return Outcome::pass();
    });
    report.check("hopf.beta.bicomodule." + tag, [&] {
      const Basis& a = family_basis(Family::SolB, n);
      for (std::size_t i = 0; i < a.size(); ++i) {
        const Tensor2 d = coproduct(a[i]);
        const Tensor2 want = coproduct(beta_map(a[i]));
        if (apply_left(d, beta_graded) != want || apply_right(d, beta_graded) != want)
          return Outcome::fail("Δβ differs from (β⊗id)Δ or (id⊗β)Δ at " + a.labels()[i]);
      }
      return Outcome::pass();
    });
    report.check("hopf.beta.right-module." + tag, [&] {
      return for_splits(n, 1, [&](int p, int q) {
        const Basis& a = family_basis(Family::SolB, p);
        const Basis& b = family_basis(Family::I0, q);
        for (std::size_t i = 0; i < a.size(); ++i)
          for (std::size_t j = 0; j < b.size(); ++j)
            if (beta_map(external_product(a[i], b[j])) != external_product(beta_map(a[i]), b[j]))
              return Outcome::fail("β(a∗x) ≠ β(a)∗x for " + a.labels()[i] + ", " + b.labels()[j]);
        return Outcome::pass();
      });
    });
    report.check("hopf.pi.bicomodule." + tag, [&] {
      const Basis& a = family_basis(Family::Peak, n);
      for (std::size_t i = 0; i < a.size(); ++i) {
        const Tensor2 d = coproduct(a[i]);
        const Tensor2 want = n < 2 ? Tensor2(CoxeterType::A) : coproduct(pi_map(a[i]));
        if (apply_left(d, pi_graded) != want || apply_right(d, pi_graded) != want)
          return Outcome::fail("Δπ differs from (π⊗id)Δ or (id⊗π)Δ at " + a.labels()[i]);
      }
      return Outcome::pass();
    });
    report.check("hopf.pi.right-module." + tag, [&] {
      return for_splits(n, 0, [&](int p, int q) {
        if (q == 0) return Outcome::pass();
        const Basis& a = family_basis(Family::Peak, p);
        const Basis& b = family_basis(Family::PeakIdeal, q);
        for (std::size_t i = 0; i < a.size(); ++i)
          for (std::size_t j = 0; j < b.size(); ++j)
            if (const AlgElem lhs = pi_graded(external_product(a[i], b[j]));
                p < 2 ? !lhs.is_zero() : lhs != external_product(pi_map(a[i]), b[j]))
              return Outcome::fail("π(a∗x) ≠ π(a)∗x for " + a.labels()[i] + ", " + b.labels()[j]);
        return Outcome::pass();
      });
    });
  }

  report.check("hopf.peak-product-witness", [] {
    const AlgElem got = peak_product_witness();
    const AlgElem want = y_basis(CoxeterType::A, 4, GeneratorSet::of(CoxeterType::A, 4, {1, 2, 3})) +
                         y_basis(CoxeterType::A, 4, GeneratorSet::of(CoxeterType::A, 4, {1, 3}));
    if (got != want) return Outcome::fail("P{1}∗P{1} = " + got.to_string());
    if (family_contains(Family::Peak, got)) return Outcome::fail("P{1}∗P{1} lies in 𝒫_4");
    return Outcome::pass("P{1}∗P{1} = Y{1,2,3} + Y{1,3} lies outside 𝒫_4, as expected");
  });
}

void verify_hopf(int max_degree, VerifyReport& report) {
  verify_hopf_laws(max_degree, report);
  verify_hopf_relations(max_degree, report);
  verify_hopf_structure(max_degree, report);
}

}  // namespace peakalg
