#ifndef MIRLAT_VERIFY_HPP_
#define MIRLAT_VERIFY_HPP_

// Runs a manifest's suites and assembles reports. A sweep over many cases
// contributes one summary record plus the first few failing cases with both
// sides printed. A suite that throws is reported as failed with the exception
// text, and the run continues.

#include <string>
#include <vector>

#include "mirlat/manifest.hpp"

namespace mirlat::io {

struct CheckRecord {
  std::string label;
  std::string input;
  std::string expected;
  std::string got;
  std::string tolerance;   // "exact" for rational checks
  bool ok = false;
};

struct Report {
  std::string suite;
  bool passed = false;
  std::vector<CheckRecord> records;
  long checks = 0;      // individual cases evaluated
  long failures = 0;    // failing cases
  double duration_ms = 0.0;
};

struct VerifyOutcome {
  std::vector<Report> reports;   // ordered by suite id
  int exit_code = 0;             // 0 iff no failing record
  long passed_suites() const;
  long failed_suites() const;
  long total_checks() const;
  long failed_checks() const;
};

VerifyOutcome run_verify(const Manifest& m);
Report run_suite(const Manifest& m, const PlannedSuite& s);

json report_to_json(const Report& r, bool with_duration = true);
json outcome_to_json(const VerifyOutcome& o, bool with_duration = true);
std::string outcome_to_text(const VerifyOutcome& o);

} // namespace mirlat::io

#endif
