#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bolalg {

/// A closed form or claim that the computation contradicts.
struct Finding {
  std::string id;
  std::string location;  // which display or statement is contradicted
  std::string message;
};

/// Outcome of comparing one literal closed form (or claim) with the computation.
struct DisplayAudit {
  std::string id;
  std::string location;
  bool matched = false;
  double deviation = 0.0;  // max-norm difference where numeric, else 0/1
  std::string detail;
};

struct AuditOptions {
  std::uint64_t seed = 1;
  int samples = 500;  // pairs per chart for the loop-law comparison
};

/// Every registered display, in a fixed order.
std::vector<DisplayAudit> audit_displays(const AuditOptions& options = {});

/// Exactly one finding per unmatched display.
std::vector<Finding> findings_from(const std::vector<DisplayAudit>& audits);

/// Finding for the classification statement that omits the (1,0,0) class.
Finding missing_xcase_finding(bool minus_type);

}  // namespace bolalg
