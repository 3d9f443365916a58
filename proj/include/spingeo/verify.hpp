// Self-contained verification suite: every quantitative claim the library
// makes about itself is re-derived here against an independent route (dense
// propagator, finite differences, quadrature, Wootters eigenvalues, ...) and
// reported as a named check. Checks never assert; callers inspect the report.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "spingeo/io_format.hpp"

namespace spingeo {

struct CheckResult {
  std::string name;    // "<criterion>/<slug>", e.g. "03-curvature/closed-vs-christoffel-numeric"
  std::string claim;   // plain-language statement of the relation being checked
  std::string status;  // "pass" | "fail" | "discrepancy-documented"
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
};

struct CriterionTiming {
  int criterion = 0;
  double seconds = 0.0;
};

struct VerifyOptions {
  // Key is either a full check name or a group key ("metric", "curvature", ...).
  std::map<std::string, double> tolerance_overrides;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<CriterionTiming> timings;
  double total_seconds = 0.0;

  int failed_count() const;
  bool all_passed() const;  // documented discrepancies do not count as failures
};

VerifyReport run_verification(const VerifyOptions& options = {});

// Stable serialization of the report ("schema": 1). Timings are volatile and
// deliberately left out so identical configs give byte-identical files.
JsonValue report_to_json(const VerifyReport& report);

}  // namespace spingeo
