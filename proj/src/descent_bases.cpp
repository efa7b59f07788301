#include "peakalg/descent_bases.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "peakalg/errors.hpp"

namespace peakalg {

const std::vector<std::uint32_t>& descent_masks(CoxeterType t, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<std::uint32_t>>> cache;
  const Group& g = Group::get(t, n);
  std::lock_guard lock(mutex);
  auto& slot = cache[{static_cast<int>(t), n}];
  if (!slot) {
    slot = std::make_unique<std::vector<std::uint32_t>>(g.key_space(), 0U);
    for (const auto& w : g.elements()) (*slot)[g.key(w)] = descent_set(w, t).mask();
  }
  return *slot;
}

namespace {

void check_set(CoxeterType t, int n, const GeneratorSet& j) {
  if (j.type() != t || j.rank() != n)
    throw std::invalid_argument("generator set " + j.to_string() + " does not belong to " + type_letter(t) +
                                std::to_string(n));
}

AlgElem class_sum(CoxeterType t, int n, const std::function<bool(std::uint32_t)>& keep) {
  const Group& g = Group::get(t, n);
  const auto& masks = descent_masks(t, n);
  std::vector<AlgElem::Term> terms;
  for (const auto& w : g.elements()) {
    const auto k = g.key(w);
    if (keep(masks[k])) terms.push_back({k, 1});
  }
  return AlgElem::from_terms(t, n, std::move(terms));
}

}  // namespace

AlgElem y_basis(CoxeterType t, int n, const GeneratorSet& j) {
  check_set(t, n, j);
  const auto m = j.mask();
  return class_sum(t, n, [m](std::uint32_t d) { return d == m; });
}

AlgElem x_basis(CoxeterType t, int n, const GeneratorSet& j) {
  check_set(t, n, j);
  const auto m = j.mask();
  return class_sum(t, n, [m](std::uint32_t d) { return (d & ~m) == 0; });
}

AlgElem y_from_x(CoxeterType t, int n, const GeneratorSet& j) {
  check_set(t, n, j);
  std::vector<std::pair<Rational, AlgElem>> pairs;
  const auto m = j.mask();
  for (std::uint32_t i = m;; i = (i - 1) & m) {
    const int sign = (std::popcount(m) - std::popcount(i)) % 2 ? -1 : 1;
    pairs.emplace_back(Rational(sign), x_basis(t, n, {t, n, i}));
    if (i == 0) break;
  }
  return linear_combine(pairs);
}

const Basis& descent_basis(CoxeterType t, int n, DescentKind kind) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<Basis>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({static_cast<int>(t), n, static_cast<int>(kind)});
    if (it != cache.end()) return *it->second;
  }
  std::vector<std::string> labels;
  std::vector<AlgElem> elems;
  for (const auto& j : all_generator_sets(t, n)) {
    labels.push_back((kind == DescentKind::Y ? "Y" : "X") + j.to_string());
    elems.push_back(kind == DescentKind::Y ? y_basis(t, n, j) : x_basis(t, n, j));
  }
  auto basis = std::make_unique<Basis>(std::string(kind == DescentKind::Y ? "Y" : "X") + "(" + type_letter(t) +
                                           std::to_string(n) + ")",
                                       t, n, std::move(labels), std::move(elems));
  std::lock_guard lock(mutex);
  auto& slot = cache[{static_cast<int>(t), n, static_cast<int>(kind)}];
  if (!slot) slot = std::move(basis);
  return *slot;
}

namespace codec {

std::vector<int> to_composition(const GeneratorSet& j) {
  if (j.type() == CoxeterType::D) throw std::invalid_argument("type D sets have no composition form");
  std::vector<int> parts;
  int prev = 0;
  for (int i : j.elements()) {
    parts.push_back(i - prev);
    prev = i;
  }
  parts.push_back(j.rank() - prev);
  // Type A: zero-length first part cannot occur; type B keeps a_0 = 0 when 0 ∈ J,
  // and otherwise has a_0 = first element.
  if (j.type() == CoxeterType::A && j.rank() == 0) parts.clear();
  return parts;
}

GeneratorSet from_composition(CoxeterType t, const std::vector<int>& parts) {
  if (t == CoxeterType::D) throw std::invalid_argument("type D sets have no composition form");
  int n = 0;
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int a = parts[i];
    const bool may_be_zero = t == CoxeterType::B && i == 0;
    if (a < 0 || (a == 0 && !may_be_zero))
      throw std::invalid_argument("malformed composition " + to_string(parts));
    n += a;
    if (i + 1 < parts.size()) mask |= 1U << n;
  }
  if (t == CoxeterType::B && parts.empty()) throw std::invalid_argument("a pseudo composition has at least one part");
  if (n > 31) throw std::invalid_argument("composition too large");
  return {t, n, mask};
}

std::vector<int> complement(CoxeterType t, const std::vector<int>& parts) {
  return to_composition(from_composition(t, parts).complement());
}

bool refines(CoxeterType t, const std::vector<int>& a, const std::vector<int>& b) {
  const auto sa = from_composition(t, a);
  const auto sb = from_composition(t, b);
  if (sa.rank() != sb.rank()) return false;
  return (sb.mask() & ~sa.mask()) == 0;
}

std::vector<int> parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("composition must be written as (a,b,...)");
  text = text.substr(1, text.size() - 2);
  std::vector<int> parts;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (item.find_first_not_of(' ', used) != std::string::npos)
      throw std::invalid_argument("malformed composition part \"" + item + "\"");
    parts.push_back(v);
  }
  return parts;
}

std::string to_string(const std::vector<int>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

}  // namespace codec

StructureTable::StructureTable(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)), c_(labels_.size() * labels_.size() * labels_.size()) {}

std::vector<Rational> StructureTable::cell(std::size_t i, std::size_t j) const {
  std::vector<Rational> out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = at(i, j, k);
  return out;
}

bool StructureTable::all_nonnegative_integers() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return is_integer(r) && sgn(r) >= 0; });
}

bool StructureTable::commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (cell(i, j) != cell(j, i)) return false;
  return true;
}

std::string tuple_text(const std::vector<Rational>& coords) {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += to_string(coords[i]);
  }
  return out + ")";
}

namespace {
std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string StructureTable::to_csv() const {
  std::string out;
  for (const auto& l : labels_) out += "," + csv_quote(l);
  out += "\n";
  for (std::size_t i = 0; i < dim(); ++i) {
    out += csv_quote(labels_[i]);
    for (std::size_t j = 0; j < dim(); ++j) out += "," + csv_quote(tuple_text(cell(i, j)));
    out += "\n";
  }
  return out;
}

nlohmann::json StructureTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < dim(); ++j) {
      nlohmann::json cellj = nlohmann::json::array();
      for (const auto& r : cell(i, j)) cellj.push_back(to_string(r));
      row.push_back(std::move(cellj));
    }
    rows.push_back(std::move(row));
  }
  return {{"name", name_}, {"labels", labels_}, {"products", std::move(rows)}};
}

namespace {

// Display columns: count UTF-8 lead bytes.
std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s) w += (c & 0xC0) != 0x80;
  return w;
}

}  // namespace

std::string StructureTable::to_pretty() const {
  std::vector<std::vector<std::string>> grid(dim() + 1, std::vector<std::string>(dim() + 1));
  for (std::size_t i = 0; i < dim(); ++i) {
    grid[0][i + 1] = labels_[i];
    grid[i + 1][0] = labels_[i];
    for (std::size_t j = 0; j < dim(); ++j) grid[i + 1][j + 1] = tuple_text(cell(i, j));
  }
  std::vector<std::size_t> width(dim() + 1, 0);
  for (const auto& row : grid)
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], display_width(row[j]));
  std::string out = name_ + "\n";
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      out += row[j] + std::string(width[j] - display_width(row[j]), ' ');
      out += j + 1 < row.size() ? " | " : "\n";
    }
  }
  return out;
}

StructureTable structure_constants(const Basis& basis) {
  StructureTable table(basis.name(), basis.labels());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const AlgElem prod = internal_product(basis[i], basis[j]);
      auto coords = basis.span().solve(prod);
      if (!coords)
        throw NotInSpanError(basis.labels()[i] + " * " + basis.labels()[j] + " leaves the span of " + basis.name());
      for (std::size_t k = 0; k < basis.size(); ++k) table.at(i, j, k) = (*coords)[k];
    }
  }
  return table;
}

StructureTable structure_constants(CoxeterType t, int n, DescentKind kind) {
  return structure_constants(descent_basis(t, n, kind));
}

}  // namespace peakalg
