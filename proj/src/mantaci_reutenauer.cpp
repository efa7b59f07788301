#include "peakalg/mantaci_reutenauer.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "peakalg/descent_bases.hpp"

namespace peakalg {

SignedComposition::SignedComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p == 0) throw std::invalid_argument("signed compositions have no zero parts");
}

int SignedComposition::n() const {
  int s = 0;
  for (int p : parts_) s += std::abs(p);
  return s;
}

std::vector<SignedComposition> SignedComposition::segments() const {
  std::vector<SignedComposition> out;
  std::vector<int> cur;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (!cur.empty() && (cur.back() > 0) != (parts_[i] > 0)) {
      out.emplace_back(std::move(cur));
      cur.clear();
    }
    cur.push_back(parts_[i]);
  }
  if (!cur.empty()) out.emplace_back(std::move(cur));
  return out;
}

std::vector<int> SignedComposition::abs() const {
  std::vector<int> out;
  for (int p : parts_) out.push_back(std::abs(p));
  return out;
}

namespace {

std::vector<int> underline_of(const std::vector<int>& parts) {
  std::vector<int> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool alternates = i > 0 && (parts[i] > 0) != (parts[i - 1] > 0);
    if (alternates) {
      out.back() += std::abs(parts[i]);
    } else {
      out.push_back(std::abs(parts[i]));
    }
  }
  return out;
}

std::vector<int> ordinary_complement(const std::vector<int>& parts) {
  return codec::complement(CoxeterType::A, parts);
}

}  // namespace

std::vector<int> SignedComposition::underline() const { return underline_of(parts_); }

SignedComposition SignedComposition::tilde() const {
  std::vector<int> out;
  for (const auto& seg : segments()) {
    if (seg.positive()) {
      out.insert(out.end(), seg.parts().begin(), seg.parts().end());
    } else {
      for (int p : ordinary_complement(seg.abs())) out.push_back(-p);
    }
  }
  return SignedComposition(std::move(out));
}

std::vector<int> SignedComposition::o_comp() const {
  std::vector<int> out;
  for (const auto& seg : segments()) {
    if (seg.positive()) {
      out.insert(out.end(), seg.parts().begin(), seg.parts().end());
    } else {
      out.insert(out.end(), seg.n(), 1);
    }
  }
  return out;
}

std::vector<int> SignedComposition::u_comp() const {
  std::vector<int> signed_parts;
  for (const auto& seg : segments()) {
    if (seg.positive()) {
      signed_parts.push_back(seg.n());
    } else {
      for (int p : ordinary_complement(seg.abs())) signed_parts.push_back(-p);
    }
  }
  return underline_of(signed_parts);
}

std::string SignedComposition::to_string() const { return codec::to_string(parts_); }

SignedComposition SignedComposition::parse(std::string_view text) { return SignedComposition(codec::parse(text)); }

std::vector<SignedComposition> all_signed_compositions(int n) {
  std::vector<SignedComposition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  for (const auto& j : all_generator_sets(CoxeterType::A, n)) {
    const auto parts = codec::to_composition(j);
    const std::uint32_t patterns = 1U << parts.size();
    for (std::uint32_t signs = 0; signs < patterns; ++signs) {
      std::vector<int> p = parts;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (signs >> i & 1U) p[i] = -p[i];
      out.emplace_back(std::move(p));
    }
  }
  return out;
}

namespace {

bool segment_refines(const SignedComposition& fine, const SignedComposition& coarse) {
  return codec::refines(CoxeterType::A, fine.abs(), coarse.abs());
}

bool compare_segments(const SignedComposition& a, const SignedComposition& b, bool flip_negative) {
  if (a.n() != b.n()) return false;
  const auto sa = a.segments();
  const auto sb = b.segments();
  if (sa.size() != sb.size()) return false;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i].positive() != sb[i].positive() || sa[i].n() != sb[i].n()) return false;
    const bool a_refines = flip_negative && !sa[i].positive();
    if (a_refines ? !segment_refines(sa[i], sb[i]) : !segment_refines(sb[i], sa[i])) return false;
  }
  return true;
}

}  // namespace

bool leq(const SignedComposition& a, const SignedComposition& b) { return compare_segments(a, b, false); }
bool preceq(const SignedComposition& a, const SignedComposition& b) { return compare_segments(a, b, true); }

SignedComposition t_class_of(const SignedPerm& w) {
  std::vector<int> parts;
  for (int i = 0; i < w.rank(); ++i) {
    const int v = w.value(i);
    const bool extend = i > 0 && (v > 0) == (w.value(i - 1) > 0) && std::abs(v) > std::abs(w.value(i - 1));
    if (extend) {
      parts.back() += v > 0 ? 1 : -1;
    } else {
      parts.push_back(v > 0 ? 1 : -1);
    }
  }
  return SignedComposition(std::move(parts));
}

namespace {

bool in_class(MRKind kind, const SignedComposition& alpha, const SignedPerm& w) {
  if (kind == MRKind::T) return t_class_of(w) == alpha;
  int pos = 0;
  for (int part : alpha.parts()) {
    const int len = std::abs(part);
    for (int j = pos; j < pos + len; ++j) {
      if ((w.value(j) > 0) != (part > 0)) return false;
      if (j > pos) {
        const bool increasing = kind == MRKind::S ? std::abs(w.value(j - 1)) < std::abs(w.value(j))
                                                  : w.value(j - 1) < w.value(j);
        if (!increasing) return false;
      }
    }
    pos += len;
  }
  return true;
}

}  // namespace

AlgElem mr_basis(MRKind kind, const SignedComposition& alpha) {
  const int n = alpha.n();
  const Group& g = Group::get(CoxeterType::B, n);
  std::vector<AlgElem::Term> terms;
  for (const auto& w : g.elements())
    if (in_class(kind, alpha, w)) terms.push_back({g.key(w), 1});
  return AlgElem::from_terms(CoxeterType::B, n, std::move(terms));
}

const Basis& omega_basis(int n, MRKind kind) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<Basis>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({n, static_cast<int>(kind)});
    if (it != cache.end()) return *it->second;
  }
  const char* prefix = kind == MRKind::T ? "T" : kind == MRKind::S ? "S" : "S~";
  std::vector<std::string> labels;
  std::vector<AlgElem> elems;
  for (const auto& a : all_signed_compositions(n)) {
    labels.push_back(prefix + a.to_string());
    elems.push_back(mr_basis(kind, a));
  }
  auto basis = std::make_unique<Basis>(std::string(prefix) + "(B" + std::to_string(n) + ")", CoxeterType::B, n,
                                       std::move(labels), std::move(elems));
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, static_cast<int>(kind)}];
  if (!slot) slot = std::move(basis);
  return *slot;
}

namespace {

AlgElem y_interval(int n, const std::vector<int>& low, const std::vector<int>& high) {
  const auto lo = codec::from_composition(CoxeterType::A, low).mask();
  const auto hi = codec::from_composition(CoxeterType::A, high).mask();
  std::vector<std::pair<Rational, AlgElem>> pairs{{Rational(0), AlgElem(CoxeterType::A, n)}};
  if ((lo & ~hi) != 0) return pairs.front().second;
  for (const auto& j : all_generator_sets(CoxeterType::A, n))
    if ((lo & ~j.mask()) == 0 && (j.mask() & ~hi) == 0) pairs.emplace_back(Rational(1), y_basis(CoxeterType::A, n, j));
  return linear_combine(pairs);
}

}  // namespace

AlgElem phi_on_omega(const SignedComposition& alpha, MRKind kind) {
  const int n = alpha.n();
  switch (kind) {
    case MRKind::S:
      return x_basis(CoxeterType::A, n, codec::from_composition(CoxeterType::A, alpha.abs()));
    case MRKind::T:
      return y_interval(n, alpha.underline(), alpha.abs());
    case MRKind::STilde:
      return y_interval(n, alpha.u_comp(), alpha.o_comp());
  }
  throw std::logic_error("unknown basis kind");
}

AlgElem x0_of(const std::vector<int>& composition) {
  std::vector<int> pseudo{0};
  pseudo.insert(pseudo.end(), composition.begin(), composition.end());
  const auto j = codec::from_composition(CoxeterType::B, pseudo);
  return x_basis(CoxeterType::B, j.rank(), j);
}

AlgElem bstilde_product(const SignedComposition& alpha) {
  const int n = alpha.n();
  return internal_product(x0_of({n}), mr_basis(MRKind::STilde, alpha));
}

void omega_closure(int n, VerifyReport& report, bool full_products) {
  const std::string tag = "n=" + std::to_string(n);
  const auto comps = all_signed_compositions(n);
  const Basis& t = omega_basis(n, MRKind::T);

  report.check("mr.count." + tag, [&] {
    const std::size_t expect = n == 0 ? 1 : 2 * static_cast<std::size_t>(std::pow(3, n - 1));
    if (comps.size() != expect) return Outcome::fail(std::to_string(comps.size()) + " signed compositions");
    return Outcome::pass(std::to_string(expect) + " signed compositions");
  });

  report.check("mr.t-partition." + tag, [&] {
    const Group& g = Group::get(CoxeterType::B, n);
    std::vector<int> hits(g.key_space(), 0);
    for (const auto& e : t.elements())
      for (const auto& term : e.terms()) ++hits[term.key];
    for (const auto& w : g.elements())
      if (hits[g.key(w)] != 1) return Outcome::fail(w.to_string() + " covered " + std::to_string(hits[g.key(w)]) + " times");
    if (t.dimension() != comps.size()) return Outcome::fail("rank " + std::to_string(t.dimension()));
    return Outcome::pass();
  });

  report.check("mr.s-and-stilde-from-t." + tag, [&] {
    for (const auto& a : comps) {
      std::vector<std::pair<Rational, AlgElem>> s_sum{{Rational(0), AlgElem(CoxeterType::B, n)}};
      std::vector<std::pair<Rational, AlgElem>> st_sum = s_sum;
      const auto at = a.tilde();
      for (std::size_t i = 0; i < comps.size(); ++i) {
        if (leq(comps[i], a)) s_sum.emplace_back(Rational(1), t[i]);
        if (preceq(comps[i], at)) st_sum.emplace_back(Rational(1), t[i]);
      }
      if (linear_combine(s_sum) != mr_basis(MRKind::S, a)) return Outcome::fail("S" + a.to_string());
      if (linear_combine(st_sum) != mr_basis(MRKind::STilde, a)) return Outcome::fail("S~" + a.to_string());
    }
    if (omega_basis(n, MRKind::S).dimension() != comps.size() ||
        omega_basis(n, MRKind::STilde).dimension() != comps.size())
      return Outcome::fail("S or S~ is not a basis");
    return Outcome::pass();
  });

  report.check("mr.contains-descent-algebra." + tag, [&] {
    for (const auto& j : all_generator_sets(CoxeterType::B, n))
      if (!t.span().contains(y_basis(CoxeterType::B, n, j))) return Outcome::fail("Y" + j.to_string());
    return Outcome::pass();
  });

  if (full_products) {
    report.check("mr.closure." + tag, [&] {
      for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j)
          if (!t.span().contains(internal_product(t[i], t[j])))
            return Outcome::fail(t.labels()[i] + " * " + t.labels()[j]);
      return Outcome::pass(std::to_string(t.size() * t.size()) + " products");
    });
  }
}

}  // namespace peakalg
