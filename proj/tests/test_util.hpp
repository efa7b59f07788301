#pragma once

#include <string>

#include <doctest.h>

#include "peakalg/report.hpp"

// Every check in the report passed; the failing ids and witnesses are printed otherwise.
inline void require_all_pass(const peakalg::VerifyReport& r) {
  std::string failures;
  for (const auto& c : r.checks())
    if (!c.passed) failures += c.id + ": " + c.witness + "\n";
  INFO(failures);
  CHECK(r.passed());
  CHECK(!r.checks().empty());
}
