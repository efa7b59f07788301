#include "peakalg/peak_algebra.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>

#include "peakalg/errors.hpp"

namespace peakalg {

const std::vector<std::uint32_t>& peak_masks(int n, bool interior) {
  static std::mutex mutex;
  static std::map<std::pair<int, bool>, std::unique_ptr<std::vector<std::uint32_t>>> cache;
  const Group& g = Group::get(CoxeterType::A, n);
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, interior}];
  if (!slot) {
    slot = std::make_unique<std::vector<std::uint32_t>>(g.key_space(), 0U);
    for (const auto& w : g.elements())
      (*slot)[g.key(w)] = interior ? interior_peak_set(w).mask() : peak_set(w).mask();
  }
  return *slot;
}

namespace {

void check_index(int n, const PeakIndex& f, bool interior) {
  if (f.rank() != n || f.interior() != interior)
    throw std::invalid_argument("peak index " + f.to_string() + " does not index " + (interior ? "𝒫°_" : "𝒫_") +
                                std::to_string(n));
}

AlgElem fiber_sum(int n, std::uint32_t mask, bool interior) {
  const Group& g = Group::get(CoxeterType::A, n);
  const auto& masks = peak_masks(n, interior);
  std::vector<AlgElem::Term> terms;
  for (std::uint32_t k = 0; k < g.key_space(); ++k)
    if (masks[k] == mask) terms.push_back({k, 1});
  return AlgElem::from_terms(CoxeterType::A, n, std::move(terms));
}

AlgElem y_sum(int n, std::uint32_t mask, bool interior) {
  std::vector<std::pair<Rational, AlgElem>> pairs{{Rational(0), AlgElem(CoxeterType::A, n)}};
  for (const auto& j : all_generator_sets(CoxeterType::A, n)) {
    const auto lam = interior ? lambda_interior(j) : lambda(j);
    if (lam.mask() == mask) pairs.emplace_back(Rational(1), y_basis(CoxeterType::A, n, j));
  }
  return linear_combine(pairs);
}

}  // namespace

AlgElem peak_basis(int n, const PeakIndex& f) {
  check_index(n, f, false);
  return fiber_sum(n, f.mask(), false);
}

AlgElem peak_basis_from_y(int n, const PeakIndex& f) {
  check_index(n, f, false);
  return y_sum(n, f.mask(), false);
}

AlgElem interior_peak_basis(int n, const PeakIndex& f) {
  check_index(n, f, true);
  return fiber_sum(n, f.mask(), true);
}

AlgElem interior_peak_basis_from_y(int n, const PeakIndex& f) {
  check_index(n, f, true);
  return y_sum(n, f.mask(), true);
}

namespace {

const Basis& cached_peak_basis(int n, bool interior) {
  static std::mutex mutex;
  static std::map<std::pair<int, bool>, std::unique_ptr<Basis>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({n, interior});
    if (it != cache.end()) return *it->second;
  }
  std::vector<std::string> labels;
  std::vector<AlgElem> elems;
  for (const auto& f : all_peak_sets(n, interior)) {
    labels.push_back((interior ? "P°" : "P") + f.to_string());
    elems.push_back(interior ? interior_peak_basis(n, f) : peak_basis(n, f));
  }
  auto basis = std::make_unique<Basis>((interior ? "P°_" : "P_") + std::to_string(n), CoxeterType::A, n,
                                       std::move(labels), std::move(elems));
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, interior}];
  if (!slot) slot = std::move(basis);
  return *slot;
}

}  // namespace

const Basis& peak_algebra_basis(int n) { return cached_peak_basis(n, false); }
const Basis& peak_ideal_basis(int n) { return cached_peak_basis(n, true); }

bool total_order_less(std::uint32_t e, std::uint32_t f) {
  const std::uint32_t diff = e ^ f;
  if (diff == 0) return false;
  const std::uint32_t top = 1U << (31 - std::countl_zero(diff));
  return (f & top) != 0;
}

AlgElem pi_on_basis(int n, const PeakIndex& f) {
  check_index(n, f, false);
  if (n < 2) throw DomainError("π needs rank at least 2");
  const std::uint32_t m = f.mask();
  if (m & 4U) return AlgElem(CoxeterType::A, n - 2);
  if (m & 2U) return -peak_basis(n - 2, PeakIndex(n - 2, (m & ~2U) >> 2));
  return peak_basis(n - 2, PeakIndex(n - 2, m >> 2));
}

AlgElem pi_map(const AlgElem& a) {
  if (a.type() != CoxeterType::A) throw DomainError("π is defined on the peak algebra inside QS_n");
  const int n = a.rank();
  if (n < 2) throw DomainError("π needs rank at least 2");
  const Basis& basis = peak_algebra_basis(n);
  auto coords = express_in_span(a, basis);
  if (!coords) throw DomainError("element is not in the peak algebra 𝒫_" + std::to_string(n));
  const auto sets = all_peak_sets(n);
  std::vector<std::pair<Rational, AlgElem>> pairs{{Rational(0), AlgElem(CoxeterType::A, n - 2)}};
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sgn(coords->coords[i]) != 0) pairs.emplace_back(coords->coords[i], pi_on_basis(n, sets[i]));
  return linear_combine(pairs);
}

StructureTable peak_table(int n) { return structure_constants(peak_algebra_basis(n)); }

namespace {

std::string nstr(int n) { return "n=" + std::to_string(n); }

GeneratorSet shift_down_b(int n, std::uint32_t mask) {
  // F-1 as a subset of {0,..,n-1}.
  return {CoxeterType::B, n, mask >> 1};
}

}  // namespace

void verify_peak_theorems(int n, VerifyReport& report) {
  const Basis& p = peak_algebra_basis(n);
  const Basis& pint = peak_ideal_basis(n);
  const auto sets = all_peak_sets(n);

  report.check("peaks.dimension." + nstr(n), [&] {
    const auto expect = fibonacci(n);
    const auto expect_int = n >= 1 ? fibonacci(n - 1) : 1;
    if (p.dimension() != expect || pint.dimension() != expect_int)
      return Outcome::fail("dim P=" + std::to_string(p.dimension()) + " dim P°=" + std::to_string(pint.dimension()));
    return Outcome::pass("dim P=" + std::to_string(expect) + ", dim P°=" + std::to_string(expect_int));
  });

  report.check("peaks.fiber-forms." + nstr(n), [&] {
    for (const auto& f : sets)
      if (peak_basis(n, f) != peak_basis_from_y(n, f)) return Outcome::fail("P" + f.to_string());
    for (const auto& f : all_peak_sets(n, true))
      if (interior_peak_basis(n, f) != interior_peak_basis_from_y(n, f)) return Outcome::fail("P°" + f.to_string());
    return Outcome::pass();
  });

  report.check("peaks.closure." + nstr(n), [&] {
    const auto table = structure_constants(p);
    if (!table.all_nonnegative_integers()) return Outcome::fail("a structure constant is not a non-negative integer");
    return Outcome::pass();
  });

  report.check("peaks.image-of-phi-unitriangular." + nstr(n), [&] {
    // Row E holds the P-coordinates of φ(X_{E-1}).
    std::vector<std::vector<Rational>> rows;
    for (const auto& e : sets) {
      const AlgElem image = push_forward(ElementMap::ForgetSigns, x_basis(CoxeterType::B, n, shift_down_b(n, e.mask())));
      auto coords = express_in_span(image, p);
      if (!coords) return Outcome::fail("φ(X_{E-1}) not in 𝒫_n for E=" + e.to_string());
      rows.push_back(coords->coords);
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (sgn(rows[i][i]) == 0) return Outcome::fail("zero diagonal at " + sets[i].to_string());
      for (std::size_t j = 0; j < sets.size(); ++j)
        if (total_order_less(sets[i].mask(), sets[j].mask()) && sgn(rows[i][j]) != 0)
          return Outcome::fail("P" + sets[j].to_string() + " appears in φ(X_{E-1}) for E=" + sets[i].to_string());
    }
    return Outcome::pass();
  });

  report.check("peaks.two-sided-ideal." + nstr(n), [&] {
    for (std::size_t i = 0; i < pint.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (!pint.span().contains(internal_product(pint[i], p[j])))
          return Outcome::fail(pint.labels()[i] + " * " + p.labels()[j]);
        if (!pint.span().contains(internal_product(p[j], pint[i])))
          return Outcome::fail(p.labels()[j] + " * " + pint.labels()[i]);
      }
    }
    return Outcome::pass();
  });

  if (n >= 2) {
    report.check("peaks.pi-quotient." + nstr(n), [&] {
      std::vector<AlgElem> images;
      for (const auto& f : sets) images.push_back(pi_on_basis(n, f));
      const std::size_t image_rank = span_rank(images);
      if (image_rank != fibonacci(n - 2)) return Outcome::fail("rank of π is " + std::to_string(image_rank));
      // Kernel dimension from rank-nullity, and the P° basis lies in the kernel.
      if (sets.size() - image_rank != pint.dimension())
        return Outcome::fail("dim ker π = " + std::to_string(sets.size() - image_rank));
      for (std::size_t i = 0; i < pint.size(); ++i)
        if (!pi_map(pint[i]).is_zero()) return Outcome::fail("π(" + pint.labels()[i] + ") != 0");
      return Outcome::pass("dim ker π = f_{n-1} = " + std::to_string(pint.dimension()));
    });
  }
}

}  // namespace peakalg
