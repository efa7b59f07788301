#include "peakalg/suites.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>

#include "peakalg/commutative_subalgebras.hpp"
#include "peakalg/descent_bases.hpp"
#include "peakalg/hopf_external.hpp"
#include "peakalg/mantaci_reutenauer.hpp"
#include "peakalg/morphisms.hpp"
#include "peakalg/peak_algebra.hpp"
#include "peakalg/reference_tables.hpp"
#include "peakalg/words_action.hpp"

namespace peakalg {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all",         "descents", "peaks", "chi", "phi",  "psi",  "ideals",
                                              "exactseq",    "commutative", "mr", "theta", "hopf", "words"};
  return names;
}

void verify_descent_oracle(int n, VerifyReport& report) {
  for (CoxeterType t : {CoxeterType::A, CoxeterType::B, CoxeterType::D}) {
    if (t == CoxeterType::D && n < 2) continue;
    report.check(std::string("descents.length-oracle.") + type_letter(t) + ".n=" + std::to_string(n), [&] {
      const LengthTable lengths(t, n);
      const auto elems = enumerate(t, n);
      if (lengths.size() != elems.size()) return Outcome::fail("the Cayley graph does not reach every element");
      for (const auto& w : elems)
        if (descent_set(w, t) != lengths.length_descents(w))
          return Outcome::fail("w=" + w.to_string() + ": combinatorial " + descent_set(w, t).to_string() + ", length " +
                               lengths.length_descents(w).to_string());
      return Outcome::pass(std::to_string(elems.size()) + " elements");
    });
  }
}

namespace {

using Task = std::function<void(VerifyReport&)>;

void descents_tasks(const SuiteOptions& o, std::vector<Task>& tasks) {
  for (int n = 1; n <= o.n_max; ++n) {
    tasks.emplace_back([n](VerifyReport& r) { verify_descent_oracle(n, r); });
    if (n <= (o.deep ? 5 : 4))
      tasks.emplace_back([n](VerifyReport& r) {
        for (CoxeterType t : {CoxeterType::A, CoxeterType::B, CoxeterType::D}) {
          if (t == CoxeterType::D && n < 2) continue;
          r.check(std::string("descents.closure.") + type_letter(t) + ".n=" + std::to_string(n), [&] {
            const auto table = structure_constants(t, n, DescentKind::Y);
            if (!table.all_nonnegative_integers()) return Outcome::fail("negative or fractional structure constant");
            return Outcome::pass();
          });
        }
      });
  }
}

void peaks_tasks(const SuiteOptions& o, std::vector<Task>& tasks) {
  for (int n = 1; n <= o.n_max; ++n) tasks.emplace_back([n](VerifyReport& r) { verify_peak_theorems(n, r); });
  tasks.emplace_back([o](VerifyReport& r) {
    for (int n = 2; n <= std::min(4, o.n_max); ++n)
      r.check("peaks.reference-table.n=" + std::to_string(n),
              [n] { return compare_with_reference(peak_table(n), reference_peak_table(n)); });
    r.check("peaks.left-ideal-witness", left_ideal_witness);
  });
}

template <void (*F)(int, VerifyReport&)>
void per_rank(const SuiteOptions& o, std::vector<Task>& tasks) {
  for (int n = 1; n <= o.n_max; ++n) tasks.emplace_back([n](VerifyReport& r) { F(n, r); });
}

void ideals_tasks(const SuiteOptions& o, std::vector<Task>& tasks) {
  per_rank<verify_ideals>(o, tasks);
  const int top = std::min(o.n_max, o.deep ? 5 : 4);
  for (int n = 3; n <= top; ++n) tasks.emplace_back([n](VerifyReport& r) { principal_right_ideal_check(n, r); });
}

void exactseq_tasks(const SuiteOptions& o, std::vector<Task>& tasks) {
  for (int n = 2; n <= o.n_max; ++n)
    tasks.emplace_back([n](VerifyReport& r) {
      for (const auto& d : diagram_catalog())
        if (d.name != "sbexact") verify_diagram(d, n, r);
    });
  const int top = o.deep ? o.n_max + 1 : o.n_max;
  for (int n = 2; n <= top; ++n) tasks.emplace_back([n](VerifyReport& r) { verify_sbexact(n, r); });
}

void commutative_tasks(const SuiteOptions& o, std::vector<Task>& tasks) {
  per_rank<verify_commutative>(o, tasks);
  per_rank<verify_restricted_maps>(o, tasks);
  tasks.emplace_back([o](VerifyReport& r) {
    for (int n = 2; n <= std::min(4, o.n_max); ++n)
      r.check("commutative.reference-table.n=" + std::to_string(n),
              [n] { return compare_with_reference(whp_table(n), reference_whp_table(n)); });
    const int top = std::max(5, o.n_max);
    r.check("commutative.loday-witness.peaks", [top] { return loday_witness(false, top); });
    r.check("commutative.loday-witness.interior", [top] { return loday_witness(true, top); });
  });
}

void mr_tasks(const SuiteOptions& o, std::vector<Task>& tasks) {
  for (int n = 1; n <= o.n_max; ++n) {
    const bool full = n <= (o.deep ? 4 : 3);
    tasks.emplace_back([n, full](VerifyReport& r) { omega_closure(n, r, full); });
  }
}

void theta_tasks(const SuiteOptions& o, std::vector<Task>& tasks) {
  per_rank<verify_theta>(o, tasks);
  for (int n = 1; n <= o.n_max; ++n)
    tasks.emplace_back([n](VerifyReport& r) {
      r.check("theta.pm-determinant.n=" + std::to_string(n), [n] { return theta_pm_bijective(n); });
    });
}

void hopf_tasks(const SuiteOptions& o, std::vector<Task>& tasks) {
  const int top = std::min(o.n_max, 6);
  tasks.emplace_back([top](VerifyReport& r) { verify_hopf_laws(top, r); });
  tasks.emplace_back([top](VerifyReport& r) { verify_hopf_relations(top, r); });
  tasks.emplace_back([top](VerifyReport& r) { verify_hopf_structure(top, r); });
}

void words_tasks(const SuiteOptions& o, std::vector<Task>& tasks) {
  tasks.emplace_back([o](VerifyReport& r) {
    const Alphabet involutive = Alphabet::paired(3);
    const Alphabet trivial = Alphabet::trivial(3);
    for (int n = 1; n <= std::min(o.n_max, 4); ++n) verify_action_identities(n, involutive, r);
    for (int n = 1; n <= std::min(o.n_max, 5); ++n) verify_action_identities(n, trivial, r);
    const int laws = std::min(o.n_max, 3);
    verify_action_laws(laws, involutive, r);
    verify_action_laws(laws, trivial, r);
  });
}

void collect(const std::string& name, const SuiteOptions& o, std::vector<Task>& tasks) {
  if (name == "descents") return descents_tasks(o, tasks);
  if (name == "peaks") return peaks_tasks(o, tasks);
  if (name == "chi") return per_rank<verify_chi>(o, tasks);
  if (name == "phi") return per_rank<verify_phi>(o, tasks);
  if (name == "psi") return per_rank<verify_psi>(o, tasks);
  if (name == "ideals") return ideals_tasks(o, tasks);
  if (name == "exactseq") return exactseq_tasks(o, tasks);
  if (name == "commutative") return commutative_tasks(o, tasks);
  if (name == "mr") return mr_tasks(o, tasks);
  if (name == "theta") return theta_tasks(o, tasks);
  if (name == "hopf") return hopf_tasks(o, tasks);
  if (name == "words") return words_tasks(o, tasks);
  if (name == "all") {
    for (const auto& s : suite_names())
      if (s != "all") collect(s, o, tasks);
    return;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

VerifyReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (options.n_max < 1 || options.n_max > 6) throw std::invalid_argument("--n-max must be in 1..6");
  if (options.jobs < 1) throw std::invalid_argument("--jobs must be positive");
  std::vector<Task> tasks;
  collect(name, options, tasks);

  std::vector<VerifyReport> parts(tasks.size(), VerifyReport(name));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        tasks[i](parts[i]);
      } catch (const std::exception& e) {
        parts[i].add({name + ".task-" + std::to_string(i), false, std::string("exception: ") + e.what(), 0});
      }
    }
  };
  const int threads = std::min<int>(options.jobs, static_cast<int>(tasks.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  VerifyReport report(name);
  for (const auto& p : parts) report.append(p);
  report.canonicalize();
  return report;
}

}  // namespace peakalg
