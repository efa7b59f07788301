#include "peakalg/group_algebra.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "peakalg/errors.hpp"

namespace peakalg {

namespace {

constexpr std::uint32_t kFactorial[] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};

inline std::uint32_t lehmer_rank(const int* abs_values, int n) {
  std::uint32_t rank = 0;
  unsigned remaining = (1U << (n + 1)) - 2U;  // bits 1..n
  for (int i = 0; i < n; ++i) {
    const int a = abs_values[i];
    const unsigned smaller = std::popcount(remaining & ((1U << a) - 1U));
    rank += smaller * kFactorial[n - 1 - i];
    remaining &= ~(1U << a);
  }
  return rank;
}

inline std::uint32_t pack_values(CoxeterType t, const int* values, int n) {
  int abs_values[kMaxRank];
  std::uint32_t signs = 0;
  for (int i = 0; i < n; ++i) {
    const int v = values[i];
    abs_values[i] = v < 0 ? -v : v;
    if (v < 0) signs |= 1U << i;
  }
  const std::uint32_t r = lehmer_rank(abs_values, n);
  return t == CoxeterType::A ? r : (r << n) | signs;
}

}  // namespace

std::uint32_t pack_key(CoxeterType t, const SignedPerm& w) {
  int values[kMaxRank];
  for (int i = 0; i < w.rank(); ++i) values[i] = w.value(i);
  return pack_values(t, values, w.rank());
}

Group::Group(CoxeterType t, int n) : type_(t), n_(n) {
  elements_ = enumerate(t, n);
  key_space_ = kFactorial[n] << (t == CoxeterType::A ? 0 : n);
  by_key_.assign(key_space_, SignedPerm{});
  for (const auto& w : elements_) by_key_[key(w)] = w;
}

const Group& Group::get(CoxeterType t, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<Group>> cache;
  if (n < 0 || n > kMaxRank) throw CapExceeded("rank " + std::to_string(n) + " is out of range");
  std::lock_guard lock(mutex);
  auto& slot = cache[{static_cast<int>(t), n}];
  if (!slot) slot.reset(new Group(t, n));
  return *slot;
}

std::uint32_t Group::key(const SignedPerm& w) const {
  if (!contains(w)) throw DomainError(w.to_string() + " is not an element of " + name());
  return pack_key(type_, w);
}

std::uint32_t Group::product_key(const SignedPerm& u, const SignedPerm& v) const {
  int values[kMaxRank];
  for (int i = 0; i < n_; ++i) values[i] = u(v.value(i));
  return pack_values(type_, values, n_);
}

AlgElem::AlgElem(CoxeterType t, int n) : type_(t), n_(n) {
  if (n < 0 || n > kMaxRank) throw CapExceeded("rank " + std::to_string(n) + " is out of range");
}

AlgElem AlgElem::single(CoxeterType t, const SignedPerm& w, const Rational& c) {
  AlgElem out(t, w.rank());
  if (!w.in_group(t))
    throw DomainError(w.to_string() + " is not an element of " + std::string(1, type_letter(t)) +
                      std::to_string(w.rank()));
  if (c != 0) out.terms_.push_back({pack_key(t, w), c});
  return out;
}

AlgElem AlgElem::sum_of(CoxeterType t, int n, const std::vector<SignedPerm>& elems) {
  std::vector<Term> terms;
  terms.reserve(elems.size());
  for (const auto& w : elems) {
    if (w.rank() != n || !w.in_group(t))
      throw DomainError(w.to_string() + " is not an element of " + std::string(1, type_letter(t)) + std::to_string(n));
    terms.push_back({pack_key(t, w), 1});
  }
  return from_terms(t, n, std::move(terms));
}

AlgElem AlgElem::from_terms(CoxeterType t, int n, std::vector<Term> terms) {
  AlgElem out(t, n);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
  for (auto& term : terms) {
    if (!out.terms_.empty() && out.terms_.back().key == term.key) {
      out.terms_.back().coeff += term.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(term));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
  return out;
}

Rational AlgElem::coeff_of_key(std::uint32_t key) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, [](const Term& t, std::uint32_t k) { return t.key < k; });
  return it != terms_.end() && it->key == key ? it->coeff : Rational(0);
}

Rational AlgElem::coeff(const SignedPerm& w) const {
  if (w.rank() != n_ || !w.in_group(type_)) return 0;
  return coeff_of_key(pack_key(type_, w));
}

std::vector<std::pair<SignedPerm, Rational>> AlgElem::to_pairs() const {
  const Group& g = group();
  std::vector<std::pair<SignedPerm, Rational>> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.emplace_back(g.element(t.key), t.coeff);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

void require_same(const AlgElem& a, const AlgElem& b, const char* what) {
  if (!a.same_group(b))
    throw std::invalid_argument(std::string(what) + ": elements of " + type_letter(a.type()) + std::to_string(a.rank()) +
                                " and " + type_letter(b.type()) + std::to_string(b.rank()) + " cannot be mixed");
}

std::vector<AlgElem::Term> merge(const std::vector<AlgElem::Term>& a, const std::vector<AlgElem::Term>& b, int sign) {
  std::vector<AlgElem::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].key < b[j].key)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].key < a[i].key) {
      out.push_back({b[j].key, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  require_same(*this, o, "sum");
  terms_ = merge(terms_, o.terms_, 1);
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  require_same(*this, o, "difference");
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

AlgElem& AlgElem::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

bool operator==(const AlgElem& a, const AlgElem& b) {
  if (!a.same_group(b) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

bool AlgElem::integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return is_integer(t.coeff); });
}

std::string AlgElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : to_pairs()) {
    std::string cs = peakalg::to_string(c);
    if (!out.empty()) out += cs.front() == '-' ? " - " : " + ";
    else if (cs.front() == '-') out += "-";
    if (cs.front() == '-') cs.erase(0, 1);
    if (cs != "1") out += cs + "*";
    out += "[" + w.to_string() + "]";
  }
  return out;
}

AlgElem linear_combine(const std::vector<std::pair<Rational, AlgElem>>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("linear_combine needs at least one summand");
  const auto& first = pairs.front().second;
  std::vector<AlgElem::Term> terms;
  for (const auto& [c, a] : pairs) {
    require_same(first, a, "linear_combine");
    if (c == 0) continue;
    for (const auto& t : a.terms()) terms.push_back({t.key, c * t.coeff});
  }
  return AlgElem::from_terms(first.type(), first.rank(), std::move(terms));
}

namespace {

bool fits_int64(const AlgElem& a, const AlgElem& b) {
  Integer sa = 0, sb = 0;
  for (const auto& t : a.terms()) {
    if (!is_integer(t.coeff)) return false;
    sa += abs(t.coeff.get_num());
  }
  for (const auto& t : b.terms()) {
    if (!is_integer(t.coeff)) return false;
    sb += abs(t.coeff.get_num());
  }
  const Integer bound = sa * sb;
  return mpz_sizeinbase(bound.get_mpz_t(), 2) < 62;
}

struct Scratch {
  std::vector<std::int64_t> ints;
  std::vector<Rational> rats;
  std::vector<std::uint8_t> seen;
  std::vector<std::uint32_t> touched;
};

Scratch& scratch_for(std::uint32_t key_space) {
  thread_local Scratch s;
  if (s.seen.size() < key_space) {
    s.ints.resize(key_space, 0);
    s.seen.resize(key_space, 0);
  }
  return s;
}

}  // namespace

AlgElem internal_product(const AlgElem& a, const AlgElem& b) {
  require_same(a, b, "internal_product");
  const CoxeterType t = a.type();
  const int n = a.rank();
  AlgElem zero(t, n);
  if (a.is_zero() || b.is_zero()) return zero;
  const Group& g = Group::get(t, n);
  Scratch& s = scratch_for(g.key_space());
  s.touched.clear();

  std::vector<SignedPerm> left;
  left.reserve(a.support_size());
  for (const auto& term : a.terms()) left.push_back(g.element(term.key));
  std::vector<SignedPerm> right;
  right.reserve(b.support_size());
  for (const auto& term : b.terms()) right.push_back(g.element(term.key));

  std::vector<AlgElem::Term> out;
  if (fits_int64(a, b)) {
    std::vector<std::int64_t> ca, cb;
    for (const auto& term : a.terms()) ca.push_back(term.coeff.get_num().get_si());
    for (const auto& term : b.terms()) cb.push_back(term.coeff.get_num().get_si());
    for (std::size_t i = 0; i < left.size(); ++i) {
      for (std::size_t j = 0; j < right.size(); ++j) {
        const std::uint32_t k = g.product_key(left[i], right[j]);
        if (!s.seen[k]) {
          s.seen[k] = 1;
          s.touched.push_back(k);
        }
        s.ints[k] += ca[i] * cb[j];
      }
    }
    std::sort(s.touched.begin(), s.touched.end());
    out.reserve(s.touched.size());
    for (auto k : s.touched) {
      if (s.ints[k] != 0) out.push_back({k, Rational(static_cast<long>(s.ints[k]))});
      s.ints[k] = 0;
      s.seen[k] = 0;
    }
  } else {
    if (s.rats.size() < g.key_space()) s.rats.resize(g.key_space());
    for (std::size_t i = 0; i < left.size(); ++i) {
      const Rational& ci = a.terms()[i].coeff;
      for (std::size_t j = 0; j < right.size(); ++j) {
        const std::uint32_t k = g.product_key(left[i], right[j]);
        if (!s.seen[k]) {
          s.seen[k] = 1;
          s.touched.push_back(k);
          s.rats[k] = 0;
        }
        s.rats[k] += ci * b.terms()[j].coeff;
      }
    }
    std::sort(s.touched.begin(), s.touched.end());
    for (auto k : s.touched) {
      if (s.rats[k] != 0) out.push_back({k, s.rats[k]});
      s.seen[k] = 0;
    }
  }
  return AlgElem::from_terms(t, n, std::move(out));
}

AlgElem push_forward(const AlgElem& a, CoxeterType target_type, int target_rank,
                     const std::function<SignedPerm(const SignedPerm&)>& f) {
  const Group& g = a.group();
  std::vector<AlgElem::Term> terms;
  terms.reserve(a.support_size());
  for (const auto& t : a.terms()) {
    const SignedPerm image = f(g.element(t.key));
    if (image.rank() != target_rank || !image.in_group(target_type))
      throw DomainError("image " + image.to_string() + " is outside " + std::string(1, type_letter(target_type)) +
                        std::to_string(target_rank));
    terms.push_back({pack_key(target_type, image), t.coeff});
  }
  return AlgElem::from_terms(target_type, target_rank, std::move(terms));
}

AlgElem push_forward(ElementMap f, const AlgElem& a) {
  const int n = a.rank();
  switch (f) {
    case ElementMap::ForgetSigns:
      if (a.type() == CoxeterType::A) return a;
      return push_forward(a, CoxeterType::A, n, forget_signs);
    case ElementMap::Sigma:
      if (a.type() != CoxeterType::B) throw DomainError("σ acts on QB_n");
      return push_forward(a, CoxeterType::B, n, sigma);
    case ElementMap::Chi:
      if (a.type() != CoxeterType::B) throw DomainError("χ is defined on QB_n");
      return push_forward(a, CoxeterType::D, n, chi_element);
    case ElementMap::Rho:
      if (a.type() != CoxeterType::D) throw DomainError("ρ is defined on QD_n");
      return push_forward(a, CoxeterType::D, n, rho_element);
  }
  throw std::logic_error("unknown element map");
}

AlgElem include_into(const AlgElem& a, CoxeterType target) {
  if (a.type() == target) return a;
  if (target == CoxeterType::A || (target == CoxeterType::D && a.type() == CoxeterType::B))
    throw DomainError("no inclusion from " + std::string(1, type_letter(a.type())) + " into " + type_letter(target));
  return push_forward(a, target, a.rank(), [](const SignedPerm& w) { return w; });
}

SpanBasis::SpanBasis(CoxeterType t, int n)
    : type_(t), n_(n), key_space_(Group::get(t, n).key_space()), pivot_row_(key_space_, -1) {}

bool SpanBasis::reduce(const AlgElem& target, std::vector<Rational>& multipliers, std::vector<Rational>& scratch,
                       std::uint32_t& first_left) const {
  if (target.type() != type_ || target.rank() != n_)
    throw std::invalid_argument("span and target live in different group algebras");
  scratch.assign(key_space_, Rational(0));
  multipliers.assign(rows_.size(), Rational(0));
  if (target.is_zero()) return true;
  for (const auto& t : target.terms()) scratch[t.key] = t.coeff;
  for (std::uint32_t k = target.terms().front().key; k < key_space_; ++k) {
    if (sgn(scratch[k]) == 0) continue;
    const std::int32_t r = pivot_row_[k];
    if (r < 0) {
      first_left = k;
      return false;
    }
    const Rational c = scratch[k];
    multipliers[r] = c;
    for (const auto& e : rows_[r].entries) scratch[e.key] -= c * e.coeff;
  }
  return true;
}

bool SpanBasis::add(const AlgElem& e) {
  std::vector<Rational> mult, scratch;
  std::uint32_t first = 0;
  const std::size_t index = inputs_++;
  for (auto& row : rows_) row.combo.resize(inputs_);
  if (reduce(e, mult, scratch, first)) return false;
  Row row;
  const Rational pivot = scratch[first];
  for (std::uint32_t k = first; k < key_space_; ++k)
    if (sgn(scratch[k]) != 0) row.entries.push_back({k, scratch[k] / pivot});
  row.combo.assign(inputs_, Rational(0));
  row.combo[index] = 1;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (sgn(mult[r]) == 0) continue;
    for (std::size_t i = 0; i < inputs_; ++i) row.combo[i] -= mult[r] * rows_[r].combo[i];
  }
  for (auto& c : row.combo) c /= pivot;
  pivot_row_[first] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

std::optional<std::vector<Rational>> SpanBasis::solve(const AlgElem& target) const {
  std::vector<Rational> mult, scratch;
  std::uint32_t first = 0;
  if (!reduce(target, mult, scratch, first)) return std::nullopt;
  std::vector<Rational> coords(inputs_, Rational(0));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (sgn(mult[r]) == 0) continue;
    const auto& combo = rows_[r].combo;
    for (std::size_t i = 0; i < combo.size(); ++i)
      if (sgn(combo[i]) != 0) coords[i] += mult[r] * combo[i];
  }
  return coords;
}

bool SpanBasis::contains(const AlgElem& target) const {
  if (target.type() != type_ || target.rank() != n_)
    throw std::invalid_argument("span and target live in different group algebras");
  // Small targets against a large key space: a sparse remainder avoids clearing a dense vector.
  if (target.support_size() * 16 < key_space_) {
    std::map<std::uint32_t, Rational> rem;
    for (const auto& t : target.terms()) rem.emplace(t.key, t.coeff);
    while (!rem.empty()) {
      const auto it = rem.begin();
      const std::int32_t r = pivot_row_[it->first];
      if (r < 0) return false;
      const Rational c = it->second;
      for (const auto& e : rows_[r].entries) {
        auto [pos, inserted] = rem.emplace(e.key, Rational(0));
        pos->second -= c * e.coeff;
        if (sgn(pos->second) == 0) rem.erase(pos);
      }
    }
    return true;
  }
  std::vector<Rational> mult, scratch;
  std::uint32_t first = 0;
  return reduce(target, mult, scratch, first);
}

bool CoordVector::integral() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return is_integer(r); });
}

std::string CoordVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += peakalg::to_string(coords[i]);
  }
  return out + ")";
}

Basis::Basis(std::string name, CoxeterType t, int n, std::vector<std::string> labels, std::vector<AlgElem> elements)
    : name_(std::move(name)),
      type_(t),
      n_(n),
      labels_(std::move(labels)),
      elements_(std::move(elements)),
      span_(std::make_shared<SpanBasis>(t, n)) {
  if (labels_.size() != elements_.size()) throw std::invalid_argument("basis labels and elements differ in length");
  for (const auto& e : elements_) {
    if (e.type() != t || e.rank() != n) throw std::invalid_argument("basis element outside the ambient algebra");
    span_->add(e);
  }
}

std::optional<CoordVector> express_in_span(const AlgElem& target, const Basis& basis) {
  auto coords = basis.span().solve(target);
  if (!coords) return std::nullopt;
  return CoordVector{basis.labels(), std::move(*coords)};
}

std::optional<CoordVector> express_in_span(const AlgElem& target, const std::vector<AlgElem>& basis) {
  SpanBasis span(target.type(), target.rank());
  for (const auto& e : basis) span.add(e);
  auto coords = span.solve(target);
  if (!coords) return std::nullopt;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) labels.push_back("e" + std::to_string(i));
  return CoordVector{std::move(labels), std::move(*coords)};
}

AlgElem reassemble(const CoordVector& coords, const Basis& basis) {
  if (coords.coords.size() != basis.size()) throw std::invalid_argument("coordinate length does not match the basis");
  std::vector<std::pair<Rational, AlgElem>> pairs;
  pairs.emplace_back(Rational(0), AlgElem(basis.type(), basis.rank()));
  for (std::size_t i = 0; i < basis.size(); ++i) pairs.emplace_back(coords.coords[i], basis[i]);
  return linear_combine(pairs);
}

std::size_t span_rank(const std::vector<AlgElem>& elems) {
  if (elems.empty()) return 0;
  SpanBasis span(elems.front().type(), elems.front().rank());
  for (const auto& e : elems) span.add(e);
  return span.rank();
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t size = m.size();
  for (const auto& row : m)
    if (row.size() != size) throw std::invalid_argument("determinant needs a square matrix");
  Rational det = 1;
  for (std::size_t c = 0; c < size; ++c) {
    std::size_t p = c;
    while (p < size && sgn(m[p][c]) == 0) ++p;
    if (p == size) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < size; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < size; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

nlohmann::json to_json(const AlgElem& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : a.to_pairs()) terms.push_back({{"perm", w.values()}, {"coeff", peakalg::to_string(c)}});
  return {{"group", std::string(1, type_letter(a.type()))}, {"n", a.rank()}, {"terms", std::move(terms)}};
}

AlgElem alg_elem_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("n") || !j.contains("terms"))
    throw std::invalid_argument("element JSON needs \"group\", \"n\" and \"terms\"");
  const CoxeterType t = parse_type(j.at("group").get<std::string>());
  const int n = j.at("n").get<int>();
  if (n < 0 || n > kMaxRank) throw std::invalid_argument("\"n\" out of range");
  std::vector<AlgElem::Term> terms;
  std::size_t pos = 0;
  for (const auto& term : j.at("terms")) {
    const std::string where = "term " + std::to_string(pos++) + ": ";
    try {
      const auto values = term.at("perm").get<std::vector<int>>();
      const SignedPerm w{std::span<const int>(values)};
      if (w.rank() != n) throw std::invalid_argument("permutation rank differs from \"n\"");
      if (!w.in_group(t)) throw std::invalid_argument(w.to_string() + " is not in the stated group");
      const auto& c = term.at("coeff");
      Rational coeff = c.is_number_integer() ? Rational(c.get<long>()) : parse_rational(c.get<std::string>());
      terms.push_back({pack_key(t, w), std::move(coeff)});
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(where + e.what());
    } catch (const std::exception& e) {
      throw std::invalid_argument(where + e.what());
    }
  }
  return AlgElem::from_terms(t, n, std::move(terms));
}

}  // namespace peakalg
