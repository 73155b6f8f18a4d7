#pragma once

#include "bolalg/displays.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bolalg {

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RunReport {
  std::string command;
  std::string inputs_digest;  // FNV-1a 64 of the canonicalised inputs, hex
  std::vector<Verdict> verdicts;
  std::vector<Finding> findings;
  std::vector<std::pair<std::string, std::string>> metrics;  // kept in insertion order
  std::optional<std::vector<std::pair<std::string, double>>> timings;  // seconds

  bool passed() const;
  void metric(std::string key, std::string value) { metrics.emplace_back(std::move(key), std::move(value)); }
  void verdict(std::string name, bool pass, std::string detail = {}) {
    verdicts.push_back({std::move(name), pass, std::move(detail)});
  }
};

enum class ReportFormat { text, json };

std::uint64_t fnv1a64(std::string_view data);
std::string digest_hex(std::string_view data);

/// Field order: command, inputs_digest, verdicts, findings, metrics, timings
/// (timings only when present).
std::string emit_report(const RunReport& report, ReportFormat format);

}  // namespace bolalg
