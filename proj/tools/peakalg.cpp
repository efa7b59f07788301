// peakalg: tables, verification suites, element export and morphism application.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "peakalg/commutative_subalgebras.hpp"
#include "peakalg/descent_bases.hpp"
#include "peakalg/errors.hpp"
#include "peakalg/mantaci_reutenauer.hpp"
#include "peakalg/morphisms.hpp"
#include "peakalg/peak_algebra.hpp"
#include "peakalg/suites.hpp"

using namespace peakalg;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string render(const StructureTable& t, const std::string& format) {
  if (format == "csv") return t.to_csv();
  if (format == "json") return t.to_json().dump(2);
  return t.to_pretty();
}

StructureTable build_table(const std::string& algebra, int n, const std::string& basis) {
  const DescentKind kind = basis == "x" ? DescentKind::X : DescentKind::Y;
  if (algebra == "P") return peak_table(n);
  if (algebra == "whp") return whp_table(n);
  if (algebra == "solB") {
    std::vector<std::string> labels;
    std::vector<AlgElem> elems;
    const Graded g = kind == DescentKind::X ? Graded::X : Graded::Y;
    const auto [lo, hi] = graded_range(g, n);
    for (int j = lo; j <= hi; ++j) {
      labels.push_back(std::string(graded_name(g)) + std::to_string(j));
      elems.push_back(graded_element(g, n, j));
    }
    return structure_constants(Basis("solB_" + std::to_string(n), CoxeterType::B, n, labels, elems));
  }
  if (algebra == "SigA") return structure_constants(CoxeterType::A, n, kind);
  if (algebra == "SigB") return structure_constants(CoxeterType::B, n, kind);
  if (algebra == "SigD") return structure_constants(CoxeterType::D, n, kind);
  throw UsageError("unknown algebra '" + algebra + "'");
}

std::string render(const VerifyReport& r, const std::string& format) {
  if (format == "json") return r.to_json().dump(2);
  if (format == "csv") {
    std::ostringstream out;
    out << "id,status,witness\n";
    for (const auto& c : r.checks()) {
      std::string w = c.witness;
      for (char& ch : w)
        if (ch == '"') ch = '\'';
      out << c.id << ',' << (c.passed ? "PASS" : "FAIL") << ",\"" << w << "\"\n";
    }
    return out.str();
  }
  return r.to_text(true);
}

/// Element names: identity, Y{..}, X{..} (with --type), X0(..), P{..}, P°{..} or Pint{..},
/// T(..), S(..), S~(..), and graded sums y_j, x_j, y0_j, x0_j, p_j, pint_j.
AlgElem named_element(const std::string& name, const std::string& type, int n) {
  const auto need_n = [&] {
    if (n < 0) throw UsageError("element '" + name + "' needs --n");
  };
  const auto starts = [&](const char* prefix) { return name.rfind(prefix, 0) == 0; };
  if (name == "identity") {
    need_n();
    return AlgElem::identity(parse_type(type), n);
  }
  if (starts("X0(")) return x0_of(codec::parse(name.substr(2)));
  if (starts("Y{") || starts("X{")) {
    need_n();
    const CoxeterType t = parse_type(type);
    const GeneratorSet j = GeneratorSet::parse(t, n, name.substr(1));
    return name[0] == 'Y' ? y_basis(t, n, j) : x_basis(t, n, j);
  }
  for (const char* prefix : {"P°{", "Pint{", "P{"})
    if (starts(prefix)) {
      need_n();
      const std::string rest = name.substr(std::string(prefix).size() - 1);
      const bool interior = std::string(prefix) != "P{";
      const PeakIndex f(n, GeneratorSet::parse(CoxeterType::A, n, rest).mask(), interior);
      return interior ? interior_peak_basis(n, f) : peak_basis(n, f);
    }
  if (starts("S~(")) return mr_basis(MRKind::STilde, SignedComposition::parse(name.substr(2)));
  if (starts("T(")) return mr_basis(MRKind::T, SignedComposition::parse(name.substr(1)));
  if (starts("S(")) return mr_basis(MRKind::S, SignedComposition::parse(name.substr(1)));
  const auto us = name.find('_');
  if (us != std::string::npos) {
    need_n();
    return graded_element(parse_graded(name.substr(0, us)), n, std::stoi(name.substr(us + 1)));
  }
  throw UsageError("unknown element '" + name + "'");
}

AlgElem apply_map(const std::string& map, const AlgElem& a) {
  if (map == "phi") return phi_map(a);
  if (map == "psi") return psi_map(a);
  if (map == "chi") return chi_map(a);
  if (map == "beta") return beta_map(a);
  if (map == "beta2") return beta_squared(a);
  if (map == "gamma") return gamma_map(a);
  if (map == "pi") return pi_map(a);
  if (map == "theta") return theta(a);
  if (map == "theta_pm") return theta_pm(a);
  throw UsageError("unknown map '" + map + "'");
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Descent, peak and Mantaci-Reutenauer algebras: tables, checks and element tools"};
  app.require_subcommand(1);

  std::string algebra, format = "pretty", out, suite = "all", element, type = "A", map, input, basis = "y", diagram_name;
  int n = -1, n_max = 4, jobs = 1;
  bool deep = false;

  auto* table = app.add_subcommand("table", "Print a multiplication table");
  table->add_option("--algebra", algebra, "P, whp, solB, SigA, SigB or SigD")
      ->required()
      ->check(CLI::IsMember({"P", "whp", "solB", "SigA", "SigB", "SigD"}));
  table->add_option("--n", n, "Rank")->required()->check(CLI::Range(1, 8));
  table->add_option("--basis", basis, "y or x (descent algebras and solB)")->check(CLI::IsMember({"y", "x"}));
  table->add_option("--format", format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
  table->add_option("--out", out, "Write to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  auto* suite_opt = verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
  std::vector<std::string> diagram_names;
  for (const auto& d : diagram_catalog()) diagram_names.push_back(d.name);
  auto* diagram_opt = verify->add_option("--diagram", diagram_name, "Check one diagram at rank --n instead of a suite")
                          ->check(CLI::IsMember(diagram_names))
                          ->excludes(suite_opt);
  verify->add_option("--n", n, "Rank for --diagram")->check(CLI::Range(1, 6))->needs(diagram_opt);
  verify->add_option("--n-max", n_max, "Largest rank")->check(CLI::Range(1, 6));
  verify->add_flag("--deep", deep, "Enable the gated exhaustive levels");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--format", format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
  verify->add_option("--out", out, "Write the report to a file");

  auto* exp = app.add_subcommand("export", "Write a named element as JSON");
  exp->add_option("--element", element, "identity, Y{..}, X{..}, X0(..), P{..}, P°{..}, T(..), S(..), S~(..), p_j, ...")
      ->required();
  exp->add_option("--type", type, "A, B or D for identity, Y{..}, X{..}");
  exp->add_option("--n", n, "Rank where the name does not fix it");
  exp->add_option("--out", out, "Write to a file");

  auto* apply = app.add_subcommand("apply", "Apply a morphism to an element file");
  apply->add_option("--map", map, "phi, psi, chi, beta, beta2, gamma, pi, theta, theta_pm")
      ->required()
      ->check(CLI::IsMember({"phi", "psi", "chi", "beta", "beta2", "gamma", "pi", "theta", "theta_pm"}));
  apply->add_option("--in", input, "Element JSON file")->required();
  apply->add_option("--out", out, "Write to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*table) {
      emit(render(build_table(algebra, n, basis), format), out);
      return 0;
    }
    if (*verify) {
      VerifyReport report("diagram");
      if (!diagram_name.empty()) {
        if (n < 0) throw UsageError("--diagram needs --n");
        verify_diagram(diagram(diagram_name), n, report);
        if (report.checks().empty()) throw UsageError("diagram " + diagram_name + " starts at n = " + std::to_string(diagram(diagram_name).min_n));
      } else {
        report = run_suite(suite, SuiteOptions{n_max, deep, jobs});
      }
      emit(render(report, format), out);
      if (!report.passed()) {
        const CheckResult* f = report.first_failure();
        std::cerr << "FAIL " << f->id << ": " << f->witness << '\n';
        return kExitFail;
      }
      return 0;
    }
    if (*exp) {
      emit(to_json(named_element(element, type, n)).dump(2), out);
      return 0;
    }
    if (*apply) {
      AlgElem a = alg_elem_from_json(read_json(input));
      emit(to_json(apply_map(map, a)).dump(2), out);
      return 0;
    }
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitFail;
  } catch (const NotInSpanError& e) {
    std::cerr << "not in span: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
