#include "peakalg/core_groups.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <stdexcept>

#include "peakalg/errors.hpp"

namespace peakalg {

char type_letter(CoxeterType t) {
  switch (t) {
    case CoxeterType::A: return 'A';
    case CoxeterType::B: return 'B';
    case CoxeterType::D: return 'D';
  }
  return '?';
}

CoxeterType parse_type(std::string_view text) {
  if (text == "A" || text == "S") return CoxeterType::A;
  if (text == "B") return CoxeterType::B;
  if (text == "D") return CoxeterType::D;
  throw std::invalid_argument("unknown group type \"" + std::string(text) + "\"");
}

namespace {

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("expected an integer, got \"" + std::string(s) + "\"");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

SignedPerm::SignedPerm(std::span<const int> values) {
  if (values.size() > static_cast<std::size_t>(kMaxRank))
    throw CapExceeded("rank " + std::to_string(values.size()) + " exceeds the supported maximum 8");
  n_ = static_cast<std::uint8_t>(values.size());
  unsigned seen = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int a = std::abs(values[i]);
    if (a < 1 || a > n_ || (seen >> a & 1U))
      throw std::invalid_argument("not a signed permutation: absolute values must be a permutation of 1.." +
                                  std::to_string(n_));
    seen |= 1U << a;
    v_[i] = static_cast<std::int8_t>(values[i]);
  }
}

SignedPerm::SignedPerm(std::initializer_list<int> values)
    : SignedPerm(std::span<const int>(values.begin(), values.size())) {}

SignedPerm SignedPerm::identity(int n) {
  if (n < 0 || n > kMaxRank) throw CapExceeded("rank out of range");
  SignedPerm w;
  w.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) w.v_[i] = static_cast<std::int8_t>(i + 1);
  return w;
}

std::vector<int> SignedPerm::values() const { return {v_.begin(), v_.begin() + n_}; }

int SignedPerm::bar_count() const {
  int c = 0;
  for (int i = 0; i < n_; ++i) c += v_[i] < 0;
  return c;
}

bool SignedPerm::in_group(CoxeterType t) const {
  switch (t) {
    case CoxeterType::A: return bar_count() == 0;
    case CoxeterType::B: return true;
    case CoxeterType::D: return bar_count() % 2 == 0;
  }
  return false;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r = *this;
  for (int i = 0; i < n_; ++i) {
    const int a = std::abs(v_[i]);
    r.v_[a - 1] = static_cast<std::int8_t>(v_[i] > 0 ? i + 1 : -(i + 1));
  }
  return r;
}

std::string SignedPerm::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (i) out += ',';
    out += std::to_string(v_[i]);
  }
  return out;
}

SignedPerm SignedPerm::parse(std::string_view text) {
  std::vector<int> vals;
  auto trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  if (!trimmed.empty())
    for (auto tok : split(trimmed, ',')) vals.push_back(parse_int(tok));
  return SignedPerm(std::span<const int>(vals));
}

SignedPerm compose(const SignedPerm& u, const SignedPerm& v) {
  if (u.rank() != v.rank())
    throw std::invalid_argument("compose: rank mismatch " + std::to_string(u.rank()) + " vs " +
                                std::to_string(v.rank()));
  std::array<int, kMaxRank> out{};
  for (int i = 0; i < v.rank(); ++i) out[i] = u(v.value(i));
  return SignedPerm(std::span<const int>(out.data(), v.rank()));
}

std::vector<int> generator_indices(CoxeterType t, int n) {
  std::vector<int> out;
  if (t == CoxeterType::B && n >= 1) out.push_back(0);
  if (t == CoxeterType::D && n >= 2) out.push_back(0);
  for (int i = 1; i < n; ++i) out.push_back(i);
  return out;
}

SignedPerm generator(CoxeterType t, int n, int index) {
  const auto valid = generator_indices(t, n);
  if (std::find(valid.begin(), valid.end(), index) == valid.end())
    throw std::invalid_argument("no generator " + std::to_string(index) + " in type " + type_letter(t) +
                                std::to_string(n));
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  if (index >= 1) {
    std::swap(v[index - 1], v[index]);
  } else if (t == CoxeterType::B) {
    v[0] = -1;
  } else {
    v[0] = -2;
    v[1] = -1;
  }
  return SignedPerm(std::span<const int>(v));
}

std::uint32_t GeneratorSet::valid_mask(CoxeterType t, int n) {
  std::uint32_t m = 0;
  for (int i : generator_indices(t, n)) m |= 1U << i;
  return m;
}

GeneratorSet::GeneratorSet(CoxeterType t, int n, std::uint32_t mask) : type_(t), n_(n), mask_(mask) {
  if (n < 0 || n > 31) throw std::invalid_argument("generator set rank out of range");
  if (mask & ~valid_mask(t, n))
    throw std::invalid_argument("generator set has bits outside the index set of " + std::string(1, type_letter(t)) +
                                std::to_string(n));
}

GeneratorSet GeneratorSet::of(CoxeterType t, int n, std::initializer_list<int> elements) {
  std::uint32_t m = 0;
  for (int e : elements) {
    if (e < 0 || e > 31) throw std::invalid_argument("generator index out of range");
    m |= 1U << e;
  }
  return {t, n, m};
}

int GeneratorSet::size() const { return std::popcount(mask_); }

std::vector<int> GeneratorSet::elements() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string GeneratorSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : elements()) {
    if (!first) out += ',';
    first = false;
    out += (type_ == CoxeterType::D && i == 0) ? std::string("1'") : std::to_string(i);
  }
  return out + "}";
}

GeneratorSet GeneratorSet::parse(CoxeterType t, int n, std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw std::invalid_argument("generator set must be written as {..}: \"" + std::string(text) + "\"");
  text = text.substr(1, text.size() - 2);
  std::uint32_t m = 0;
  bool blank = true;
  for (char c : text) blank = blank && c == ' ';
  if (!blank) {
    for (auto tok : split(text, ',')) {
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      int idx;
      if (tok == "1'") {
        if (t != CoxeterType::D) throw std::invalid_argument("token 1' only exists in type D");
        idx = 0;
      } else {
        idx = parse_int(tok);
        if (t == CoxeterType::D && idx == 0) throw std::invalid_argument("type D has no generator 0; use 1'");
      }
      if (idx < 0 || idx > 31) throw std::invalid_argument("generator index out of range");
      m |= 1U << idx;
    }
  }
  return {t, n, m};
}

std::vector<GeneratorSet> all_generator_sets(CoxeterType t, int n) {
  const std::uint32_t full = GeneratorSet::valid_mask(t, n);
  std::vector<GeneratorSet> out;
  // Enumerate submasks of full in increasing order.
  for (std::uint32_t m = 0;; m = ((m | ~full) + 1) & full) {
    out.emplace_back(t, n, m);
    if (m == full) break;
  }
  return out;
}

PeakIndex::PeakIndex(int n, std::uint32_t mask, bool interior) : n_(n), mask_(mask), interior_(interior) {
  if (n < 0 || n > 31) throw std::invalid_argument("peak set rank out of range");
  std::uint32_t allowed = n >= 2 ? ((1U << n) - 2U) : 0U;
  if (interior) allowed &= ~2U;
  if ((mask & ~allowed) || !is_sparse(mask))
    throw std::invalid_argument("mask " + std::to_string(mask) + " is not a valid " +
                                (interior ? "interior " : "") + "peak set of rank " + std::to_string(n));
}

PeakIndex PeakIndex::of(int n, std::initializer_list<int> elements, bool interior) {
  std::uint32_t m = 0;
  for (int e : elements) {
    if (e < 0 || e > 31) throw std::invalid_argument("peak index out of range");
    m |= 1U << e;
  }
  return {n, m, interior};
}

int PeakIndex::size() const { return std::popcount(mask_); }

std::vector<int> PeakIndex::elements() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string PeakIndex::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : elements()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(i);
  }
  return out + "}";
}

std::vector<PeakIndex> all_peak_sets(int n, bool interior) {
  std::vector<PeakIndex> out;
  const std::uint32_t limit = n >= 2 ? (1U << n) : 1U;
  for (std::uint32_t m = 0; m < limit; m += 2) {
    if (!PeakIndex::is_sparse(m)) continue;
    if (interior && (m & 2U)) continue;
    out.emplace_back(n, m, interior);
  }
  return out;
}

std::uint64_t fibonacci(int n) {
  std::uint64_t a = 1, b = 1;
  for (int i = 1; i < n; ++i) {
    const auto c = a + b;
    a = b;
    b = c;
  }
  return n < 0 ? 0 : b;
}

GeneratorSet descent_set(const SignedPerm& w, CoxeterType t) {
  if (!w.in_group(t))
    throw DomainError(w.to_string() + " is not an element of " + std::string(1, type_letter(t)) +
                      std::to_string(w.rank()));
  const int n = w.rank();
  std::uint32_t m = 0;
  for (int i = 1; i < n; ++i)
    if (w.value(i - 1) > w.value(i)) m |= 1U << i;
  if (t == CoxeterType::B && n >= 1 && w.value(0) < 0) m |= 1U;
  if (t == CoxeterType::D && n >= 2 && -w.value(0) > w.value(1)) m |= 1U;
  return {t, n, m};
}

PeakIndex peak_set(const SignedPerm& u) {
  if (!u.is_unsigned()) throw DomainError("peak set of the signed element " + u.to_string());
  const int n = u.rank();
  std::uint32_t m = 0;
  for (int i = 1; i < n; ++i) {
    const int prev = i >= 2 ? u.value(i - 2) : 0;
    if (prev < u.value(i - 1) && u.value(i - 1) > u.value(i)) m |= 1U << i;
  }
  return {n, m};
}

PeakIndex interior_peak_set(const SignedPerm& u) {
  const auto p = peak_set(u);
  return {p.rank(), p.mask() & ~2U, true};
}

namespace {
void require_type_a(const GeneratorSet& j) {
  if (j.type() != CoxeterType::A) throw std::invalid_argument("Λ is defined on type-A generator sets");
}
}  // namespace

PeakIndex lambda(const GeneratorSet& j) {
  require_type_a(j);
  return {j.rank(), j.mask() & ~(j.mask() << 1)};
}

PeakIndex lambda_interior(const GeneratorSet& j) {
  require_type_a(j);
  return {j.rank(), j.mask() & ~(j.mask() << 1) & ~2U, true};
}

struct SignedPermAccess {
  static std::int8_t* data(SignedPerm& w) { return w.v_.data(); }
};

SignedPerm forget_signs(const SignedPerm& w) {
  SignedPerm r = w;
  auto* d = SignedPermAccess::data(r);
  for (int i = 0; i < r.rank(); ++i) d[i] = static_cast<std::int8_t>(std::abs(d[i]));
  return r;
}

SignedPerm sigma(const SignedPerm& w) {
  SignedPerm r = w;
  auto* d = SignedPermAccess::data(r);
  for (int i = 0; i < r.rank(); ++i) d[i] = static_cast<std::int8_t>(-d[i]);
  return r;
}

SignedPerm chi_element(const SignedPerm& w) {
  if (w.bar_count() % 2 == 0) return w;
  SignedPerm r = w;
  auto* d = SignedPermAccess::data(r);
  d[0] = static_cast<std::int8_t>(-d[0]);
  return r;
}

SignedPerm rho_element(const SignedPerm& w) {
  if (w.rank() < 2) throw DomainError("ρ needs rank at least 2");
  if (!w.in_group(CoxeterType::D)) throw DomainError(w.to_string() + " is not in D_n");
  SignedPerm r = w;
  auto* d = SignedPermAccess::data(r);
  d[0] = static_cast<std::int8_t>(-d[0]);
  d[1] = static_cast<std::int8_t>(-d[1]);
  return r;
}

int EnumerationCaps::for_type(CoxeterType t) const {
  switch (t) {
    case CoxeterType::A: return a;
    case CoxeterType::B: return b;
    case CoxeterType::D: return d;
  }
  return 0;
}

EnumerationCaps EnumerationCaps::parse(std::string_view text) {
  EnumerationCaps caps;
  if (text.find('=') == std::string_view::npos) {
    const int v = parse_int(text);
    caps.a = caps.b = caps.d = v;
  } else {
    for (auto item : split(text, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) throw std::invalid_argument("cap entries look like B=6");
      auto key = item.substr(0, eq);
      while (!key.empty() && key.front() == ' ') key.remove_prefix(1);
      const int v = parse_int(item.substr(eq + 1));
      switch (parse_type(key)) {
        case CoxeterType::A: caps.a = v; break;
        case CoxeterType::B: caps.b = v; break;
        case CoxeterType::D: caps.d = v; break;
      }
    }
  }
  for (int v : {caps.a, caps.b, caps.d})
    if (v < 0 || v > kMaxRank) throw std::invalid_argument("caps must lie in 0..8");
  return caps;
}

const EnumerationCaps& EnumerationCaps::current() {
  static const EnumerationCaps caps = [] {
    const char* env = std::getenv("PEAKALG_CAP");
    return env && *env ? parse(env) : EnumerationCaps{};
  }();
  return caps;
}

std::uint64_t group_order(CoxeterType t, int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  if (t == CoxeterType::A) return f;
  if (t == CoxeterType::B) return f << n;
  return n == 0 ? 1 : f << (n - 1);
}

namespace {

void enumerate_rec(CoxeterType t, int n, int pos, unsigned used, int bars, std::array<int, kMaxRank>& cur,
                   std::vector<SignedPerm>& out) {
  if (pos == n) {
    if (t == CoxeterType::D && bars % 2) return;
    out.emplace_back(std::span<const int>(cur.data(), n));
    return;
  }
  if (t != CoxeterType::A) {
    for (int a = n; a >= 1; --a) {
      if (used >> a & 1U) continue;
      cur[pos] = -a;
      enumerate_rec(t, n, pos + 1, used | 1U << a, bars + 1, cur, out);
    }
  }
  for (int a = 1; a <= n; ++a) {
    if (used >> a & 1U) continue;
    cur[pos] = a;
    enumerate_rec(t, n, pos + 1, used | 1U << a, bars, cur, out);
  }
}

}  // namespace

std::vector<SignedPerm> enumerate(CoxeterType t, int n, const EnumerationCaps& caps) {
  if (n < 0) throw std::invalid_argument("negative rank");
  if (n > caps.for_type(t))
    throw CapExceeded("rank " + std::to_string(n) + " exceeds the enumeration cap " +
                      std::to_string(caps.for_type(t)) + " for type " + type_letter(t));
  std::vector<SignedPerm> out;
  out.reserve(group_order(t, n));
  std::array<int, kMaxRank> cur{};
  enumerate_rec(t, n, 0, 0, 0, cur, out);
  return out;
}

std::size_t SignedPermHash::operator()(const SignedPerm& w) const noexcept {
  std::uint64_t h = static_cast<std::uint64_t>(w.rank());
  for (int i = 0; i < w.rank(); ++i) h = h * 131 + static_cast<std::uint64_t>(w.value(i) + 16);
  return static_cast<std::size_t>(h ^ (h >> 29));
}

LengthTable::LengthTable(CoxeterType t, int n) : type_(t), n_(n) {
  if (n < 0 || n > 6) throw CapExceeded("length table is limited to rank 6");
  std::vector<SignedPerm> gens;
  for (int i : generator_indices(t, n)) gens.push_back(generator(t, n, i));
  std::deque<SignedPerm> queue{SignedPerm::identity(n)};
  table_.emplace(queue.front(), 0);
  while (!queue.empty()) {
    const SignedPerm w = queue.front();
    queue.pop_front();
    const int len = table_.at(w);
    for (const auto& s : gens) {
      const SignedPerm ws = w * s;
      if (table_.emplace(ws, len + 1).second) queue.push_back(ws);
    }
  }
}

int LengthTable::length(const SignedPerm& w) const {
  auto it = table_.find(w);
  if (it == table_.end()) throw DomainError(w.to_string() + " is not in the tabulated group");
  return it->second;
}

GeneratorSet LengthTable::length_descents(const SignedPerm& w) const {
  const int lw = length(w);
  std::uint32_t m = 0;
  for (int i : generator_indices(type_, n_))
    if (length(w * generator(type_, n_, i)) < lw) m |= 1U << i;
  return {type_, n_, m};
}

}  // namespace peakalg
