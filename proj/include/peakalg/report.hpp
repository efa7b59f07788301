#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace peakalg {

struct Outcome {
  bool ok = true;
  std::string detail;

  static Outcome pass(std::string detail = {}) { return {true, std::move(detail)}; }
  static Outcome fail(std::string detail) { return {false, std::move(detail)}; }
};

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string witness;
  double seconds = 0;
};

class VerifyReport {
 public:
  explicit VerifyReport(std::string suite) : suite_(std::move(suite)) {}

  /// Runs fn, timing it. An exception counts as a failure and becomes the witness.
  const CheckResult& check(const std::string& id, const std::function<Outcome()>& fn);
  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void append(const VerifyReport& other);

  const std::string& suite() const { return suite_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool passed() const;
  std::size_t failures() const;
  const CheckResult* first_failure() const;

  /// Checks sorted by id so the output does not depend on scheduling.
  void canonicalize();

  /// Wall times are left out unless requested so that reports are reproducible.
  nlohmann::json to_json(bool with_time = false) const;
  std::string to_text(bool with_time = true) const;

 private:
  std::string suite_;
  std::vector<CheckResult> checks_;
};

}  // namespace peakalg
