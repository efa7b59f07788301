#include "peakalg/morphisms.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>

#include "peakalg/errors.hpp"
#include "peakalg/mantaci_reutenauer.hpp"
#include "peakalg/peak_algebra.hpp"

namespace peakalg {

namespace {

constexpr std::uint32_t kBit0 = 1U;
constexpr std::uint32_t kBit1 = 2U;
constexpr std::uint32_t kBit2 = 4U;

std::string nstr(int n) { return "n=" + std::to_string(n); }

Rational pow2r(int k) { return Rational(pow2(static_cast<unsigned>(k))); }

/// Σ weight(F)·P_F (or P°_F) over peak sets F ⊆ allowed.
template <class Weight>
AlgElem peak_sum(int n, std::uint32_t allowed, bool interior, Weight weight) {
  const Basis& basis = interior ? peak_ideal_basis(n) : peak_algebra_basis(n);
  const auto sets = all_peak_sets(n, interior);
  std::vector<std::pair<Rational, AlgElem>> pairs{{Rational(0), AlgElem(CoxeterType::A, n)}};
  for (std::size_t i = 0; i < sets.size(); ++i)
    if ((sets[i].mask() & ~allowed) == 0) pairs.emplace_back(weight(sets[i].mask()), basis[i]);
  return linear_combine(pairs);
}

Rational weight_2f(std::uint32_t f) { return pow2r(std::popcount(f)); }

AlgElem yd(int n, std::uint32_t m) { return y_basis(CoxeterType::D, n, GeneratorSet(CoxeterType::D, n, m)); }
AlgElem xd(int n, std::uint32_t m) { return x_basis(CoxeterType::D, n, GeneratorSet(CoxeterType::D, n, m)); }
AlgElem xb(int n, std::uint32_t m) { return x_basis(CoxeterType::B, n, GeneratorSet(CoxeterType::B, n, m)); }
AlgElem yb(int n, std::uint32_t m) { return y_basis(CoxeterType::B, n, GeneratorSet(CoxeterType::B, n, m)); }

void require_member(const Basis& b, const AlgElem& a, const char* map) {
  if (!a.same_group(AlgElem(b.type(), b.rank())) || !b.span().contains(a))
    throw DomainError(std::string(map) + " is defined on " + b.name() + " and the input lies outside it");
}

std::vector<Rational> x_coords(const AlgElem& a, CoxeterType t, const char* map) {
  const Basis& xs = descent_basis(t, a.rank(), DescentKind::X);
  if (a.type() != t) throw DomainError(std::string(map) + " expects an element of Q" + type_letter(t) + "_n");
  auto c = express_in_span(a, xs);
  if (!c) throw DomainError(std::string(map) + " is defined on " + xs.name() + " and the input lies outside it");
  return std::move(c->coords);
}

/// Σ c_J·X_{J>>shift} over J avoiding `killed`, in B_{n-shift}.
AlgElem shift_x(int n, CoxeterType t, const std::vector<Rational>& coords, std::uint32_t killed, int shift) {
  const auto sets = all_generator_sets(t, n);
  std::vector<std::pair<Rational, AlgElem>> pairs{{Rational(0), AlgElem(CoxeterType::B, n - shift)}};
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sgn(coords[i]) != 0 && (sets[i].mask() & killed) == 0)
      pairs.emplace_back(coords[i], xb(n - shift, sets[i].mask() >> shift));
  return linear_combine(pairs);
}

std::uint32_t a_range(int n) { return GeneratorSet::valid_mask(CoxeterType::A, n); }

}  // namespace

AlgElem chi_closed_form(int n, const GeneratorSet& j, DescentKind kind) {
  if (n < 2) throw DomainError("χ closed forms need rank at least 2");
  if (j.type() != CoxeterType::B || j.rank() != n) throw std::invalid_argument("χ takes a type B set of rank n");
  const std::uint32_t rest = j.mask() & ~(kBit0 | kBit1);
  const bool zero = j.contains(0);
  const bool one = j.contains(1);
  const std::uint32_t p = kBit0;  // 1'
  const std::uint32_t o = kBit1;  // 1
  if (kind == DescentKind::Y) {
    if (!zero && !one) return yd(n, rest);
    if (!zero) return yd(n, p | rest) + yd(n, o | rest) + yd(n, p | o | rest);
    if (!one) return yd(n, rest) + yd(n, p | rest) + yd(n, o | rest);
    return yd(n, p | o | rest);
  }
  if (!zero && !one) return xd(n, rest);
  if (!zero) return xd(n, p | o | rest);
  if (!one) return xd(n, p | rest) + xd(n, o | rest);
  return Rational(2) * xd(n, p | o | rest);
}

AlgElem phi_closed_form(int n, const GeneratorSet& j, DescentKind kind) {
  if (j.type() != CoxeterType::B || j.rank() != n) throw std::invalid_argument("φ takes a type B set of rank n");
  const std::uint32_t m = j.mask();
  if (kind == DescentKind::Y) return peak_sum(n, (m ^ (m << 1)) & a_range(n), false, weight_2f);
  const Rational c = pow2r(j.size());
  return peak_sum(n, (m | (m << 1)) & a_range(n), false, [&](std::uint32_t) { return c; });
}

AlgElem phi_ideal_closed_form(int n, const GeneratorSet& j, DescentKind kind) {
  if (j.type() != CoxeterType::B || j.rank() != n || j.contains(0))
    throw std::invalid_argument("the ideal forms take a type B set of rank n without 0");
  const std::uint32_t m = j.mask();
  if (kind == DescentKind::Y)
    return peak_sum(n, (m ^ (m << 1)) & a_range(n), true, [](std::uint32_t f) { return pow2r(1 + std::popcount(f)); });
  const Rational c = pow2r(1 + j.size());
  return peak_sum(n, (m | (m << 1)) & a_range(n), true, [&](std::uint32_t) { return c; });
}

AlgElem y0_basis(int n, const GeneratorSet& j) {
  if (j.contains(0)) throw std::invalid_argument("Y⁰_J needs 0 ∉ J");
  return yb(n, j.mask() | kBit0) + yb(n, j.mask());
}

AlgElem x0_basis(int n, const GeneratorSet& j) {
  if (j.contains(0)) throw std::invalid_argument("X⁰_J needs 0 ∉ J");
  return xb(n, j.mask() | kBit0);
}

const char* psi_case_name(PsiCase c) {
  switch (c) {
    case PsiCase::Plain: return "J";
    case PsiCase::One: return "{1}uJ";
    case PsiCase::OnePrime: return "{1'}uJ";
    case PsiCase::Both: return "{1',1}uJ";
  }
  return "?";
}

GeneratorSet psi_case_set(int n, PsiCase c, const GeneratorSet& j) {
  if (j.type() != CoxeterType::D || j.rank() != n || (j.mask() & (kBit0 | kBit1)))
    throw std::invalid_argument("ψ cases take J ⊆ {2,..,n-1} as a type D set");
  std::uint32_t extra = 0;
  if (c == PsiCase::One) extra = kBit1;
  if (c == PsiCase::OnePrime) extra = kBit0;
  if (c == PsiCase::Both) extra = kBit0 | kBit1;
  return {CoxeterType::D, n, j.mask() | extra};
}

AlgElem psi_closed_form(int n, PsiCase c, const GeneratorSet& j, DescentKind kind) {
  if (n < 2) throw DomainError("ψ closed forms need rank at least 2");
  psi_case_set(n, c, j);  // validates
  const std::uint32_t m = j.mask();
  const std::uint32_t ar = a_range(n);
  if (kind == DescentKind::Y) {
    switch (c) {
      case PsiCase::Plain:
        return peak_sum(n, (m ^ (m << 1)) & ar, false, weight_2f);
      case PsiCase::One:
      case PsiCase::OnePrime: {
        // Sets {1}∪F with F ⊆ J△(J+1); the weight counts F only.
        const std::uint32_t allowed = ((m ^ (m << 1)) | kBit1) & ar;
        std::vector<std::pair<Rational, AlgElem>> pairs{{Rational(0), AlgElem(CoxeterType::A, n)}};
        const Basis& p = peak_algebra_basis(n);
        const auto sets = all_peak_sets(n);
        for (std::size_t i = 0; i < sets.size(); ++i) {
          const std::uint32_t f = sets[i].mask();
          if ((f & kBit1) && (f & ~allowed) == 0) pairs.emplace_back(pow2r(std::popcount(f) - 1), p[i]);
        }
        return linear_combine(pairs);
      }
      case PsiCase::Both:
        return peak_sum(n, (m ^ (kBit2 | (m << 1))) & ar, false, weight_2f);
    }
  }
  const int k = std::popcount(m);
  switch (c) {
    case PsiCase::Plain: {
      const Rational w = pow2r(k);
      return peak_sum(n, (m | (m << 1)) & ar, false, [&](std::uint32_t) { return w; });
    }
    case PsiCase::One:
    case PsiCase::OnePrime: {
      const Rational w = pow2r(k);
      return peak_sum(n, (m | (m << 1) | kBit1) & ar, false, [&](std::uint32_t) { return w; });
    }
    case PsiCase::Both: {
      const Rational w = pow2r(k + 1);
      return peak_sum(n, (m | (m << 1) | kBit1 | kBit2) & ar, false, [&](std::uint32_t) { return w; });
    }
  }
  throw std::logic_error("unknown ψ case");
}

AlgElem phi_map(const AlgElem& a) {
  if (a.type() != CoxeterType::B) throw DomainError("φ is defined on Σ(B_n)");
  require_member(descent_basis(CoxeterType::B, a.rank(), DescentKind::Y), a, "φ");
  return push_forward(ElementMap::ForgetSigns, a);
}

AlgElem psi_map(const AlgElem& a) {
  if (a.type() != CoxeterType::D) throw DomainError("ψ is defined on Σ(D_n)");
  require_member(descent_basis(CoxeterType::D, a.rank(), DescentKind::Y), a, "ψ");
  return push_forward(ElementMap::ForgetSigns, a);
}

AlgElem chi_map(const AlgElem& a) {
  if (a.type() != CoxeterType::B) throw DomainError("χ is defined on Σ(B_n)");
  require_member(descent_basis(CoxeterType::B, a.rank(), DescentKind::Y), a, "χ");
  return push_forward(ElementMap::Chi, a);
}

AlgElem beta_map(const AlgElem& a) {
  if (a.rank() < 1) throw DomainError("β needs rank at least 1");
  return shift_x(a.rank(), CoxeterType::B, x_coords(a, CoxeterType::B, "β"), kBit0, 1);
}

AlgElem beta_squared(const AlgElem& a) {
  if (a.rank() < 2) throw DomainError("β² needs rank at least 2");
  return shift_x(a.rank(), CoxeterType::B, x_coords(a, CoxeterType::B, "β²"), kBit0 | kBit1, 2);
}

AlgElem gamma_map(const AlgElem& a) {
  if (a.rank() < 2) throw DomainError("γ needs rank at least 2");
  return shift_x(a.rank(), CoxeterType::D, x_coords(a, CoxeterType::D, "γ"), kBit0 | kBit1, 2);
}

AlgElem beta_on_y(int n, const GeneratorSet& j) {
  if (n < 1) throw DomainError("β needs rank at least 1");
  if (!j.contains(0)) return yb(n - 1, j.mask() >> 1);
  return -yb(n - 1, (j.mask() & ~kBit0) >> 1);
}

AlgElem theta(const AlgElem& a) {
  if (a.type() != CoxeterType::A || a.rank() < 1) throw DomainError("Θ is defined on Σ(A_{n-1}), n >= 1");
  const int n = a.rank();
  require_member(descent_basis(CoxeterType::A, n, DescentKind::Y), a, "Θ");
  return internal_product(Rational(2) * interior_peak_basis(n, PeakIndex(n, 0, true)), a);
}

AlgElem theta_pm(const AlgElem& a) {
  if (a.type() != CoxeterType::B || a.rank() < 1) throw DomainError("Θ± is defined on Ω(B_n), n >= 1");
  const int n = a.rank();
  require_member(omega_basis(n, MRKind::T), a, "Θ±");
  return internal_product(xb(n, kBit0), a);
}

AlgElem theta_closed_form_x(int n, const GeneratorSet& j) {
  if (j.type() != CoxeterType::A || j.rank() != n) throw std::invalid_argument("Θ takes a type A set of rank n");
  const std::uint32_t m = j.mask();
  const Rational c = pow2r(1 + j.size());
  return peak_sum(n, (m | (m << 1)) & a_range(n), true, [&](std::uint32_t) { return c; });
}

AlgElem imchi_basis(int n, const GeneratorSet& j, int i) {
  psi_case_set(n, PsiCase::Plain, j);
  const std::uint32_t m = j.mask();
  switch (i) {
    case 1: return yd(n, m);
    case 2: return yd(n, m | kBit0) + yd(n, m | kBit1);
    case 3: return yd(n, m | kBit0 | kBit1);
  }
  throw std::invalid_argument("Y^{(i)} needs i in {1,2,3}");
}

AlgElem imchi_by_class(int n, const GeneratorSet& j, int i) {
  psi_case_set(n, PsiCase::Plain, j);
  if (i < 1 || i > 3) throw std::invalid_argument("Y^{(i)} needs i in {1,2,3}");
  const Group& g = Group::get(CoxeterType::D, n);
  const auto& masks = descent_masks(CoxeterType::D, n);
  std::vector<AlgElem::Term> terms;
  for (const auto& w : g.elements()) {
    const std::uint32_t key = g.key(w);
    if ((masks[key] & ~(kBit0 | kBit1)) != j.mask()) continue;
    const int a = std::abs(w.value(0));
    const int b = w.value(1);
    const int cls = a < b ? 1 : a > std::abs(b) ? 2 : 3;
    if (cls == i) terms.push_back({key, 1});
  }
  return AlgElem::from_terms(CoxeterType::D, n, std::move(terms));
}

namespace {

std::vector<AlgElem> x_with(CoxeterType t, int n, std::uint32_t any_of) {
  std::vector<AlgElem> out;
  for (const auto& j : all_generator_sets(t, n))
    if (j.mask() & any_of) out.push_back(x_basis(t, n, j));
  return out;
}

}  // namespace

std::vector<AlgElem> ideal_i0(int n) { return x_with(CoxeterType::B, n, kBit0); }
std::vector<AlgElem> ideal_i01(int n) { return x_with(CoxeterType::B, n, kBit0 | kBit1); }
std::vector<AlgElem> ideal_d11(int n) { return x_with(CoxeterType::D, n, kBit0 | kBit1); }

const Basis& phi_x_basis(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Basis>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  std::vector<std::string> labels;
  std::vector<AlgElem> elems;
  for (const auto& f : all_peak_sets(n)) {
    const GeneratorSet j(CoxeterType::B, n, f.mask() >> 1);
    labels.push_back("X" + j.to_string());
    elems.push_back(push_forward(ElementMap::ForgetSigns, x_basis(CoxeterType::B, n, j)));
  }
  auto basis = std::make_unique<Basis>("phi(X)_" + std::to_string(n), CoxeterType::A, n, std::move(labels),
                                       std::move(elems));
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::move(basis);
  return *slot;
}

namespace {

/// gen·e for every e lies in the ideal, and the products span it.
Outcome generates(const AlgElem& gen, const std::vector<AlgElem>& algebra, const std::vector<AlgElem>& ideal) {
  SpanBasis target(gen.type(), gen.rank());
  for (const auto& e : ideal) target.add(e);
  SpanBasis image(gen.type(), gen.rank());
  for (std::size_t i = 0; i < algebra.size(); ++i) {
    const AlgElem prod = internal_product(gen, algebra[i]);
    if (!target.contains(prod)) return Outcome::fail("product with algebra element " + std::to_string(i) + " leaves the ideal");
    image.add(prod);
  }
  if (image.rank() != target.rank())
    return Outcome::fail("products span rank " + std::to_string(image.rank()) + " of " + std::to_string(target.rank()));
  return Outcome::pass("rank " + std::to_string(target.rank()));
}

}  // namespace

void principal_right_ideal_check(int n, VerifyReport& report) {
  const std::string tag = nstr(n);
  const AlgElem x0n = xb(n, kBit0);
  const AlgElem p0n = interior_peak_basis(n, PeakIndex(n, 0, true));
  const auto i0 = ideal_i0(n);
  const auto& pint = peak_ideal_basis(n).elements();
  report.check("ideals.right-principal.x0-omega." + tag,
               [&] { return generates(x0n, omega_basis(n, MRKind::T).elements(), i0); });
  report.check("ideals.right-principal.x0-solomon-b." + tag,
               [&] { return generates(x0n, descent_basis(CoxeterType::B, n, DescentKind::X).elements(), i0); });
  report.check("ideals.right-principal.p0-solomon-a." + tag,
               [&] { return generates(p0n, descent_basis(CoxeterType::A, n, DescentKind::X).elements(), pint); });
  report.check("ideals.right-principal.p0-peaks." + tag,
               [&] { return generates(p0n, peak_algebra_basis(n).elements(), pint); });
}

Outcome left_ideal_witness() {
  const AlgElem y1 = y_basis(CoxeterType::A, 3, GeneratorSet::of(CoxeterType::A, 3, {1}));
  const AlgElem p2 = interior_peak_basis(3, PeakIndex::of(3, {2}, true));
  const AlgElem prod = internal_product(y1, p2);
  if (peak_ideal_basis(3).span().contains(prod)) return Outcome::fail("Y{1}·P°{2} lies in 𝒫°_3");
  return Outcome::pass("Y{1}·P°{2} = " + prod.to_string() + " is outside 𝒫°_3");
}

Outcome theta_pm_bijective(int n) {
  const auto i0 = ideal_i0(n);
  const AlgElem x0n = xb(n, kBit0);
  std::vector<std::vector<Rational>> matrix;
  for (const auto& e : i0) {
    auto c = express_in_span(internal_product(x0n, e), i0);
    if (!c) return Outcome::fail("Θ± leaves I⁰");
    matrix.push_back(std::move(c->coords));
  }
  const Rational det = determinant(matrix);
  if (sgn(det) == 0) return Outcome::fail("determinant 0");
  return Outcome::pass("det = " + to_string(det));
}

Outcome nomorphism_arithmetic(int n) {
  if (n < 3) return Outcome::fail("the obstruction starts at n = 3");
  const std::size_t dim_n = peak_algebra_basis(n).dimension();
  const std::size_t dim_n1 = peak_algebra_basis(n - 1).dimension();
  const std::size_t kernel = dim_n - dim_n1;
  std::vector<AlgElem> images;
  for (const auto& e : ideal_i0(n)) images.push_back(push_forward(ElementMap::ForgetSigns, e));
  const std::size_t forced = span_rank(images);
  if (kernel != fibonacci(n - 2) || forced != fibonacci(n - 1))
    return Outcome::fail("kernel " + std::to_string(kernel) + ", φ(I⁰) rank " + std::to_string(forced));
  if (forced <= kernel) return Outcome::fail("no contradiction");
  return Outcome::pass("dim φ(ker β) = f_{n-1} = " + std::to_string(forced) + " > f_{n-2} = " + std::to_string(kernel));
}

CoordVector phi_x2_square() {
  const Basis& basis = phi_x_basis(5);
  const AlgElem a = push_forward(ElementMap::ForgetSigns, xb(5, 1U << 2));
  auto c = express_in_span(internal_product(a, a), basis);
  if (!c) throw NotInSpanError("φ(X{2})² is not in 𝒫_5");
  return *c;
}

namespace {

/// f(e_i·e_j) == f(e_i)·f(e_j) on all ordered pairs of the basis.
Outcome multiplicative(const Basis& src, const std::function<AlgElem(const AlgElem&)>& f) {
  std::vector<AlgElem> img;
  for (const auto& e : src.elements()) img.push_back(f(e));
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j)
      if (f(internal_product(src[i], src[j])) != internal_product(img[i], img[j]))
        return Outcome::fail(src.labels()[i] + " * " + src.labels()[j]);
  return Outcome::pass(std::to_string(src.size() * src.size()) + " pairs");
}

Outcome image_rank(const std::vector<AlgElem>& imgs, std::size_t expect) {
  const std::size_t r = span_rank(imgs);
  if (r != expect) return Outcome::fail("rank " + std::to_string(r) + ", expected " + std::to_string(expect));
  return Outcome::pass("rank " + std::to_string(r));
}

constexpr int kMultiplicativeMax = 4;

}  // namespace

void verify_chi(int n, VerifyReport& report) {
  if (n < 2) return;
  const std::string tag = nstr(n);
  const auto sets = all_generator_sets(CoxeterType::B, n);
  for (auto kind : {DescentKind::Y, DescentKind::X}) {
    const char* k = kind == DescentKind::Y ? "y" : "x";
    report.check(std::string("chi.closed-form-") + k + "." + tag, [&] {
      for (const auto& j : sets) {
        const AlgElem e = kind == DescentKind::Y ? y_basis(CoxeterType::B, n, j) : x_basis(CoxeterType::B, n, j);
        if (chi_closed_form(n, j, kind) != push_forward(ElementMap::Chi, e)) return Outcome::fail(k + j.to_string());
      }
      return Outcome::pass(std::to_string(sets.size()) + " labels");
    });
  }
  report.check("chi.image." + tag, [&] {
    std::vector<AlgElem> spanning;
    for (const auto& j : all_generator_sets(CoxeterType::D, n)) {
      if (j.mask() & (kBit0 | kBit1)) continue;
      for (int i = 1; i <= 3; ++i) {
        const AlgElem e = imchi_basis(n, j, i);
        if (e != imchi_by_class(n, j, i)) return Outcome::fail("Y^(" + std::to_string(i) + ")" + j.to_string());
        spanning.push_back(e);
      }
    }
    std::vector<AlgElem> images;
    for (const auto& j : sets) images.push_back(push_forward(ElementMap::Chi, y_basis(CoxeterType::B, n, j)));
    const std::size_t expect = 3 * (std::size_t{1} << (n - 2));
    const std::size_t r_span = span_rank(spanning);
    const std::size_t r_img = span_rank(images);
    std::vector<AlgElem> both = spanning;
    both.insert(both.end(), images.begin(), images.end());
    if (r_span != expect || r_img != expect || span_rank(both) != expect)
      return Outcome::fail("ranks " + std::to_string(r_span) + "/" + std::to_string(r_img));
    const std::size_t codim = (std::size_t{1} << n) - expect;
    if (codim != (std::size_t{1} << (n - 2))) return Outcome::fail("codimension " + std::to_string(codim));
    return Outcome::pass("dim image = " + std::to_string(expect));
  });
  if (n <= kMultiplicativeMax)
    report.check("chi.multiplicative." + tag,
                 [&] { return multiplicative(descent_basis(CoxeterType::B, n, DescentKind::X), chi_map); });
}

void verify_phi(int n, VerifyReport& report) {
  const std::string tag = nstr(n);
  const auto sets = all_generator_sets(CoxeterType::B, n);
  for (auto kind : {DescentKind::Y, DescentKind::X}) {
    const char* k = kind == DescentKind::Y ? "y" : "x";
    report.check(std::string("phi.closed-form-") + k + "." + tag, [&] {
      for (const auto& j : sets) {
        const AlgElem e = kind == DescentKind::Y ? y_basis(CoxeterType::B, n, j) : x_basis(CoxeterType::B, n, j);
        if (phi_closed_form(n, j, kind) != push_forward(ElementMap::ForgetSigns, e))
          return Outcome::fail(k + j.to_string());
      }
      return Outcome::pass(std::to_string(sets.size()) + " labels");
    });
  }
  report.check("phi.complement-symmetry." + tag, [&] {
    for (const auto& j : sets)
      if (phi_map(y_basis(CoxeterType::B, n, j)) != phi_map(y_basis(CoxeterType::B, n, j.complement())))
        return Outcome::fail("Y" + j.to_string());
    return Outcome::pass();
  });
  if (n >= 1) {
    report.check("phi.ideal-closed-forms." + tag, [&] {
      for (const auto& j : sets) {
        if (j.contains(0)) continue;
        if (phi_ideal_closed_form(n, j, DescentKind::X) != push_forward(ElementMap::ForgetSigns, x0_basis(n, j)))
          return Outcome::fail("X0" + j.to_string());
        if (phi_ideal_closed_form(n, j, DescentKind::Y) != push_forward(ElementMap::ForgetSigns, y0_basis(n, j)))
          return Outcome::fail("Y0" + j.to_string());
      }
      return Outcome::pass();
    });
    report.check("phi.x0n-is-twice-p0n." + tag, [&] {
      const AlgElem lhs = push_forward(ElementMap::ForgetSigns, xb(n, kBit0));
      if (lhs != Rational(2) * interior_peak_basis(n, PeakIndex(n, 0, true))) return Outcome::fail(lhs.to_string());
      return Outcome::pass();
    });
  }
  report.check("phi.surjective." + tag, [&] {
    std::vector<AlgElem> imgs;
    for (const auto& j : sets) imgs.push_back(push_forward(ElementMap::ForgetSigns, x_basis(CoxeterType::B, n, j)));
    return image_rank(imgs, fibonacci(n));
  });
  if (n <= kMultiplicativeMax)
    report.check("phi.multiplicative." + tag,
                 [&] { return multiplicative(descent_basis(CoxeterType::B, n, DescentKind::X), phi_map); });
  if (n == 5) {
    report.check("phi.x2-square-witness.n=5", [&] {
      const CoordVector c = phi_x2_square();
      std::map<std::string, Rational> want{{"X{2}", 2}, {"X{3}", 4}, {"X{0,3}", -2}, {"X{1,3}", 14}};
      for (std::size_t i = 0; i < c.coords.size(); ++i) {
        const auto it = want.find(c.labels[i]);
        const Rational expect = it == want.end() ? Rational(0) : it->second;
        if (c.coords[i] != expect) return Outcome::fail(c.to_string());
      }
      return Outcome::pass(c.to_string());
    });
  }
}

void verify_psi(int n, VerifyReport& report) {
  if (n < 2) return;
  const std::string tag = nstr(n);
  std::vector<GeneratorSet> rests;
  for (const auto& j : all_generator_sets(CoxeterType::D, n))
    if (!(j.mask() & (kBit0 | kBit1))) rests.push_back(j);
  for (auto kind : {DescentKind::Y, DescentKind::X}) {
    const char* k = kind == DescentKind::Y ? "y" : "x";
    report.check(std::string("psi.closed-form-") + k + "." + tag, [&] {
      for (const auto& j : rests) {
        for (auto c : {PsiCase::Plain, PsiCase::One, PsiCase::OnePrime, PsiCase::Both}) {
          const GeneratorSet s = psi_case_set(n, c, j);
          const AlgElem e = kind == DescentKind::Y ? y_basis(CoxeterType::D, n, s) : x_basis(CoxeterType::D, n, s);
          if (psi_closed_form(n, c, j, kind) != push_forward(ElementMap::ForgetSigns, e))
            return Outcome::fail(std::string(k) + s.to_string());
        }
      }
      return Outcome::pass(std::to_string(4 * rests.size()) + " labels");
    });
  }
  report.check("psi.one-equals-one-prime." + tag, [&] {
    for (const auto& j : rests)
      if (psi_map(yd(n, j.mask() | kBit1)) != psi_map(yd(n, j.mask() | kBit0))) return Outcome::fail(j.to_string());
    return Outcome::pass();
  });
  report.check("psi.surjective." + tag, [&] {
    std::vector<AlgElem> imgs;
    for (const auto& j : all_generator_sets(CoxeterType::D, n))
      imgs.push_back(push_forward(ElementMap::ForgetSigns, x_basis(CoxeterType::D, n, j)));
    return image_rank(imgs, fibonacci(n));
  });
  if (n <= kMultiplicativeMax)
    report.check("psi.multiplicative." + tag,
                 [&] { return multiplicative(descent_basis(CoxeterType::D, n, DescentKind::X), psi_map); });
}

void verify_ideals(int n, VerifyReport& report) {
  const std::string tag = nstr(n);
  const auto sets = all_generator_sets(CoxeterType::B, n);
  if (n >= 1) {
    report.check("ideals.beta-on-y." + tag, [&] {
      for (const auto& j : sets)
        if (beta_map(y_basis(CoxeterType::B, n, j)) != beta_on_y(n, j)) return Outcome::fail("Y" + j.to_string());
      return Outcome::pass();
    });
    report.check("ideals.kernel-of-beta." + tag, [&] {
      const auto i0 = ideal_i0(n);
      for (const auto& e : i0)
        if (!beta_map(e).is_zero()) return Outcome::fail("β(X⁰) != 0");
      std::vector<AlgElem> imgs;
      for (const auto& j : sets) imgs.push_back(beta_map(x_basis(CoxeterType::B, n, j)));
      const std::size_t r = span_rank(imgs);
      const std::size_t half = std::size_t{1} << (n - 1);
      if (r != half) return Outcome::fail("β has rank " + std::to_string(r));
      if (span_rank(i0) != half) return Outcome::fail("dim I⁰ = " + std::to_string(span_rank(i0)));
      return Outcome::pass("dim ker β = " + std::to_string(half));
    });
    report.check("ideals.phi-of-i0-is-peak-ideal." + tag, [&] {
      std::vector<AlgElem> imgs;
      for (const auto& e : ideal_i0(n)) {
        imgs.push_back(push_forward(ElementMap::ForgetSigns, e));
        if (!peak_ideal_basis(n).span().contains(imgs.back())) return Outcome::fail("φ(I⁰) leaves 𝒫°");
      }
      return image_rank(imgs, peak_ideal_basis(n).dimension());
    });
  }
  if (n <= kMultiplicativeMax && n >= 1)
    report.check("ideals.beta-multiplicative." + tag,
                 [&] { return multiplicative(descent_basis(CoxeterType::B, n, DescentKind::X), beta_map); });
  if (n <= kMultiplicativeMax && n >= 2) {
    report.check("ideals.beta-squared-multiplicative." + tag,
                 [&] { return multiplicative(descent_basis(CoxeterType::B, n, DescentKind::X), beta_squared); });
    report.check("ideals.gamma-multiplicative." + tag,
                 [&] { return multiplicative(descent_basis(CoxeterType::D, n, DescentKind::X), gamma_map); });
  }
  if (n >= 3) report.check("ideals.no-morphism-to-lower-rank." + tag, [&] { return nomorphism_arithmetic(n); });
}

void verify_theta(int n, VerifyReport& report) {
  if (n < 1) return;
  const std::string tag = nstr(n);
  const auto comps = all_signed_compositions(n);
  report.check("theta.closed-form-x." + tag, [&] {
    for (const auto& j : all_generator_sets(CoxeterType::A, n))
      if (theta(x_basis(CoxeterType::A, n, j)) != theta_closed_form_x(n, j)) return Outcome::fail("X" + j.to_string());
    return Outcome::pass();
  });
  report.check("theta.pm-on-stilde." + tag, [&] {
    for (const auto& a : comps) {
      const AlgElem want = x0_of(a.abs());
      if (theta_pm(mr_basis(MRKind::STilde, a)) != want) return Outcome::fail("S~" + a.to_string());
      if (bstilde_product(a) != want) return Outcome::fail("X⁰·S~" + a.to_string());
    }
    return Outcome::pass(std::to_string(comps.size()) + " signed compositions");
  });
  report.check("theta.phi-on-omega." + tag, [&] {
    for (const auto& a : comps)
      for (auto kind : {MRKind::T, MRKind::S, MRKind::STilde})
        if (phi_on_omega(a, kind) != push_forward(ElementMap::ForgetSigns, mr_basis(kind, a)))
          return Outcome::fail(std::string(kind == MRKind::T ? "T" : kind == MRKind::S ? "S" : "S~") + a.to_string());
    return Outcome::pass();
  });
  report.check("theta.image-is-peak-ideal." + tag, [&] {
    std::vector<AlgElem> imgs;
    for (const auto& e : descent_basis(CoxeterType::A, n, DescentKind::X).elements()) imgs.push_back(theta(e));
    return image_rank(imgs, fibonacci(n - 1));
  });
  report.check("theta.pm-bijective-on-i0." + tag, [&] { return theta_pm_bijective(n); });
}

}  // namespace peakalg
