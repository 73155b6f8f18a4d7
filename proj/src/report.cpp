#include "bolalg/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace bolalg {

bool RunReport::passed() const {
  return findings.empty() &&
         std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest_hex(std::string_view data) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(data)));
  return buf;
}

namespace {

std::string emit_json(const RunReport& r) {
  nlohmann::ordered_json doc;
  doc["command"] = r.command;
  doc["inputs_digest"] = r.inputs_digest;
  doc["passed"] = r.passed();
  doc["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts)
    doc["verdicts"].push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
  doc["findings"] = nlohmann::ordered_json::array();
  for (const auto& f : r.findings)
    doc["findings"].push_back({{"id", f.id}, {"location", f.location}, {"message", f.message}});
  doc["metrics"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.metrics) doc["metrics"][k] = v;
  if (r.timings) {
    doc["timings"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : *r.timings) doc["timings"][k] = v;
  }
  return doc.dump(2) + "\n";
}

std::string emit_text(const RunReport& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  out << "inputs_digest: " << r.inputs_digest << "\n";
  out << "passed: " << (r.passed() ? "true" : "false") << "\n";
  out << "verdicts:";
  if (r.verdicts.empty()) out << " []";
  out << "\n";
  for (const auto& v : r.verdicts) {
    out << "  " << (v.pass ? "PASS " : "FAIL ") << v.name;
    if (!v.detail.empty()) out << ": " << v.detail;
    out << "\n";
  }
  out << "findings:";
  if (r.findings.empty()) out << " []";
  out << "\n";
  for (const auto& f : r.findings)
    out << "  [" << f.id << "] " << f.location << ": " << f.message << "\n";
  out << "metrics:";
  if (r.metrics.empty()) out << " {}";
  out << "\n";
  for (const auto& [k, v] : r.metrics) out << "  " << k << ": " << v << "\n";
  if (r.timings) {
    out << "timings:\n";
    char buf[64];
    for (const auto& [k, v] : *r.timings) {
      std::snprintf(buf, sizeof buf, "%.3f s", v);
      out << "  " << k << ": " << buf << "\n";
    }
  }
  return out.str();
}

}  // namespace

std::string emit_report(const RunReport& report, ReportFormat format) {
  return format == ReportFormat::json ? emit_json(report) : emit_text(report);
}

}  // namespace bolalg
