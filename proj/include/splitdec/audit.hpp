#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "splitdec/decomposition.hpp"

namespace splitdec {

// Necessary conditions every valid n-split must satisfy, checked on one
// decomposition. Ids run "i" .. "ix".
struct AuditCheck {
  std::string id;
  std::string statement;
  bool applies = true;  // false when the hypothesis does not hold
  bool passed = true;
  bool warning = false;  // a failure is reported but does not fail the audit
  std::string detail;
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  std::vector<std::string> notes;

  // No non-warning check failed.
  bool passed() const;
  std::vector<std::string> failures() const;
  std::string text() const;
  nlohmann::json to_json() const;
};

// pre: D is valid (PreconditionError otherwise).
AuditReport audit(const SplitDecomposition& D);

}  // namespace splitdec
