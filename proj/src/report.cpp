#include "peakalg/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

namespace peakalg {

const CheckResult& VerifyReport::check(const std::string& id, const std::function<Outcome()>& fn) {
  CheckResult r;
  r.id = id;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = fn();
    r.passed = o.ok;
    r.witness = std::move(o.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.witness = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  checks_.push_back(std::move(r));
  return checks_.back();
}

void VerifyReport::append(const VerifyReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerifyReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t VerifyReport::failures() const {
  return std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.passed; });
}

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed) return &c;
  return nullptr;
}

void VerifyReport::canonicalize() {
  std::stable_sort(checks_.begin(), checks_.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
}

nlohmann::json VerifyReport::to_json(bool with_time) const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j = {{"id", c.id}, {"status", c.passed ? "pass" : "fail"}, {"witness", c.witness}};
    if (with_time) j["seconds"] = c.seconds;
    checks.push_back(std::move(j));
  }
  return {{"suite", suite_}, {"passed", passed()}, {"failures", failures()}, {"checks", std::move(checks)}};
}

std::string VerifyReport::to_text(bool with_time) const {
  std::string out;
  char buf[64];
  for (const auto& c : checks_) {
    out += c.passed ? "PASS  " : "FAIL  ";
    out += c.id;
    if (with_time) {
      std::snprintf(buf, sizeof buf, "  [%.3fs]", c.seconds);
      out += buf;
    }
    if (!c.witness.empty()) out += "  " + c.witness;
    out += "\n";
  }
  out += suite_ + ": " + std::to_string(checks_.size() - failures()) + "/" + std::to_string(checks_.size()) +
         " checks passed\n";
  return out;
}

}  // namespace peakalg
