#include <stdexcept>

#include "peakalg/commutative_subalgebras.hpp"
#include "peakalg/mantaci_reutenauer.hpp"
#include "peakalg/morphisms.hpp"
#include "peakalg/peak_algebra.hpp"

namespace peakalg {

const std::vector<DiagramSpec>& diagram_catalog() {
  static const std::vector<DiagramSpec> catalog{
      {"bda", {"Sol(B_n)", "Sol(D_n)", "Sol(A_{n-1})"}, {"chi", "phi", "psi"}, {"psi.chi = phi"}, 2},
      {"pi", {"Sol(B_n)", "Sol(B_{n-2})", "P_n", "P_{n-2}"}, {"beta^2", "phi", "pi"}, {"pi.phi = phi.beta^2"}, 2},
      {"gammabeta", {"Sol(B_n)", "Sol(D_n)", "Sol(B_{n-2})"}, {"chi", "gamma", "beta^2"}, {"gamma.chi = beta^2"}, 2},
      {"theta", {"Omega(B_n)", "Sol(A_{n-1})"}, {"theta_pm", "theta", "phi"}, {"phi.theta_pm = theta.phi"}, 1},
      {"bexact",
       {"I01_n", "Sol(B_n)", "Sol(B_{n-2})", "P0_n", "P_n", "P_{n-2}"},
       {"beta^2", "phi", "pi"},
       {"ker beta^2 = I01_n", "beta^2 onto", "ker pi = P0_n", "pi onto", "phi(I01_n) = phi(I0_n) = P0_n", "phi onto",
        "pi.phi = phi.beta^2"},
       2},
      {"dexact",
       {"I1'1_n", "Sol(D_n)", "Sol(B_{n-2})", "P0_n", "P_n", "P_{n-2}"},
       {"gamma", "psi", "phi", "pi", "chi"},
       {"ker gamma = I1'1_n", "gamma onto", "psi(I1'1_n) = P0_n", "psi onto", "pi.psi = phi.gamma",
        "chi(I01_n) in I1'1_n"},
       2},
      {"sbexact",
       {"span{x_n,x_{n-1}}", "sol(B_n)", "sol(B_{n-2})", "span{sum p_j}", "wp_n", "wp_{n-2}"},
       {"beta^2", "phi", "pi"},
       {"rows exact", "vertical maps onto", "pi.phi = phi.beta^2"},
       2},
  };
  return catalog;
}

const DiagramSpec& diagram(const std::string& name) {
  for (const auto& d : diagram_catalog())
    if (d.name == name) return d;
  std::string names;
  for (const auto& d : diagram_catalog()) names += (names.empty() ? "" : ", ") + d.name;
  throw std::invalid_argument("unknown diagram '" + name + "' (known: " + names + ")");
}

namespace {

std::string nstr(int n) { return "n=" + std::to_string(n); }

Outcome rank_is(const std::string& what, const std::vector<AlgElem>& elems, std::size_t want) {
  const std::size_t r = span_rank(elems);
  if (r != want) return Outcome::fail(what + " has rank " + std::to_string(r) + ", expected " + std::to_string(want));
  return Outcome::pass();
}

Outcome all_in(const std::string& what, const std::vector<AlgElem>& elems, const Basis& target) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (!target.span().contains(elems[i])) return Outcome::fail(what + ": element " + std::to_string(i) + " leaves " + target.name());
  return Outcome::pass();
}

template <class F>
std::vector<AlgElem> map_all(const std::vector<AlgElem>& src, F f) {
  std::vector<AlgElem> out;
  for (const auto& e : src) out.push_back(f(e));
  return out;
}

AlgElem forget(const AlgElem& a) { return push_forward(ElementMap::ForgetSigns, a); }

/// Exactness of 0 → K → V → W → 0 where V has basis `domain`, K is spanned by `kernel`
/// and f is the map: f(K) = 0, dim K = dim V - rank f, and rank f = dim W.
Outcome exact_row(const std::vector<AlgElem>& domain, const std::vector<AlgElem>& kernel,
                  const std::function<AlgElem(const AlgElem&)>& f, std::size_t target_dim) {
  for (std::size_t i = 0; i < kernel.size(); ++i)
    if (!f(kernel[i]).is_zero()) return Outcome::fail("kernel element " + std::to_string(i) + " is not killed");
  const std::size_t r = span_rank(map_all(domain, f));
  if (r != target_dim) return Outcome::fail("map has rank " + std::to_string(r) + ", target dim " + std::to_string(target_dim));
  const std::size_t k = span_rank(kernel);
  if (k != span_rank(domain) - r) return Outcome::fail("dim kernel " + std::to_string(span_rank(domain) - r) + " but the subspace has " + std::to_string(k));
  return Outcome::pass("kernel dim " + std::to_string(k) + ", image dim " + std::to_string(r));
}

}  // namespace

void verify_diagram(const DiagramSpec& spec, int n, VerifyReport& report) {
  if (n < spec.min_n) return;
  const std::string pre = "diagram." + spec.name + ".";
  const std::string tag = nstr(n);
  const auto& xb = descent_basis(CoxeterType::B, n, DescentKind::X).elements();
  const auto& yb = descent_basis(CoxeterType::B, n, DescentKind::Y).elements();

  if (spec.name == "bda") {
    report.check(pre + "psi-chi-equals-phi." + tag, [&] {
      for (std::size_t i = 0; i < yb.size(); ++i)
        if (psi_map(chi_map(yb[i])) != phi_map(yb[i])) return Outcome::fail("Y basis element " + std::to_string(i));
      return Outcome::pass();
    });
  } else if (spec.name == "pi") {
    report.check(pre + "pi-phi-equals-phi-beta2." + tag, [&] {
      for (std::size_t i = 0; i < xb.size(); ++i)
        if (pi_map(forget(xb[i])) != forget(beta_squared(xb[i]))) return Outcome::fail("X basis element " + std::to_string(i));
      return Outcome::pass();
    });
  } else if (spec.name == "gammabeta") {
    report.check(pre + "gamma-chi-equals-beta2." + tag, [&] {
      for (std::size_t i = 0; i < xb.size(); ++i)
        if (gamma_map(chi_map(xb[i])) != beta_squared(xb[i])) return Outcome::fail("X basis element " + std::to_string(i));
      return Outcome::pass();
    });
  } else if (spec.name == "theta") {
    report.check(pre + "phi-theta-pm-equals-theta-phi." + tag, [&] {
      const Basis& t = omega_basis(n, MRKind::T);
      for (std::size_t i = 0; i < t.size(); ++i)
        if (forget(theta_pm(t[i])) != theta(forget(t[i]))) return Outcome::fail(t.labels()[i]);
      return Outcome::pass();
    });
  } else if (spec.name == "bexact") {
    const Basis& p = peak_algebra_basis(n);
    const Basis& pint = peak_ideal_basis(n);
    report.check(pre + "top-row." + tag, [&] {
      return exact_row(xb, ideal_i01(n), beta_squared, std::size_t{1} << (n - 2));
    });
    report.check(pre + "bottom-row." + tag, [&] {
      return exact_row(p.elements(), pint.elements(), pi_map, fibonacci(n - 2));
    });
    report.check(pre + "vertical-maps-onto." + tag, [&] {
      const auto i01 = map_all(ideal_i01(n), forget);
      const auto i0 = map_all(ideal_i0(n), forget);
      for (auto o : {all_in("φ(I01)", i01, pint), rank_is("φ(I01)", i01, pint.dimension()),
                     rank_is("φ(I0)", i0, pint.dimension()), rank_is("φ(Σ(B_n))", map_all(xb, forget), p.dimension()),
                     rank_is("φ(Σ(B_{n-2}))",
                             map_all(descent_basis(CoxeterType::B, n - 2, DescentKind::X).elements(), forget),
                             fibonacci(n - 2))})
        if (!o.ok) return o;
      return Outcome::pass();
    });
    report.check(pre + "square." + tag, [&] {
      for (std::size_t i = 0; i < xb.size(); ++i)
        if (pi_map(forget(xb[i])) != forget(beta_squared(xb[i]))) return Outcome::fail("X basis element " + std::to_string(i));
      return Outcome::pass();
    });
  } else if (spec.name == "dexact") {
    const auto& xd = descent_basis(CoxeterType::D, n, DescentKind::X).elements();
    const Basis& p = peak_algebra_basis(n);
    const Basis& pint = peak_ideal_basis(n);
    report.check(pre + "top-row." + tag, [&] {
      return exact_row(xd, ideal_d11(n), gamma_map, std::size_t{1} << (n - 2));
    });
    report.check(pre + "bottom-row." + tag, [&] {
      return exact_row(p.elements(), pint.elements(), pi_map, fibonacci(n - 2));
    });
    report.check(pre + "vertical-maps-onto." + tag, [&] {
      const auto d11 = map_all(ideal_d11(n), forget);
      for (auto o : {all_in("ψ(I1'1)", d11, pint), rank_is("ψ(I1'1)", d11, pint.dimension()),
                     rank_is("ψ(Σ(D_n))", map_all(xd, forget), p.dimension())})
        if (!o.ok) return o;
      return Outcome::pass();
    });
    report.check(pre + "square." + tag, [&] {
      for (std::size_t i = 0; i < xd.size(); ++i)
        if (pi_map(forget(xd[i])) != forget(gamma_map(xd[i]))) return Outcome::fail("X basis element " + std::to_string(i));
      return Outcome::pass();
    });
    report.check(pre + "chi-maps-i01-into-i1p1." + tag, [&] {
      SpanBasis target(CoxeterType::D, n);
      for (const auto& e : ideal_d11(n)) target.add(e);
      for (const auto& e : ideal_i01(n))
        if (!target.contains(chi_map(e))) return Outcome::fail("χ(I01) leaves I1'1");
      return Outcome::pass();
    });
  } else if (spec.name == "sbexact") {
    verify_sbexact(n, report);
  } else {
    throw std::invalid_argument("diagram '" + spec.name + "' has no checker");
  }
}

}  // namespace peakalg
