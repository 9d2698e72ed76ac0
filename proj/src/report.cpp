#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "superdom/harness.hpp"

namespace superdom {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

std::string markdown_cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string to_json(std::span<const TheoremCheck> checks, const ReportOptions& options) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["checks"] = ordered_json::array();
  std::uint64_t failed = 0;
  for (const TheoremCheck& c : checks) {
    ordered_json row;
    row["theorem_id"] = std::string(to_string(c.id));
    row["corpus_id"] = c.corpus;
    row["instances"] = c.instances;
    row["passes"] = c.passes;
    row["skipped"] = c.skipped;
    row["failure_count"] = c.failure_count;
    row["failures"] = ordered_json::array();
    for (const Failure& f : c.failures) {
      ordered_json fr;
      fr["graphs"] = f.graphs;
      fr["expected"] = f.expected;
      fr["got"] = f.got;
      row["failures"].push_back(std::move(fr));
    }
    if (options.include_timing) row["elapsed_ms"] = c.elapsed_ms;
    doc["checks"].push_back(std::move(row));
    failed += c.passed() ? 0 : 1;
  }
  doc["summary"] = {{"checks", checks.size()}, {"passed", checks.size() - failed}, {"failed", failed}};
  return doc.dump(2) + "\n";
}

std::string to_csv(std::span<const TheoremCheck> checks, const ReportOptions& options) {
  std::string out = "theorem_id,corpus,instances,failures,elapsed_ms\r\n";
  for (const TheoremCheck& c : checks) {
    out += csv_field(std::string(to_string(c.id))) + "," + csv_field(c.corpus) + "," + std::to_string(c.instances) +
           "," + std::to_string(c.failure_count) + "," + (options.include_timing ? fixed_ms(c.elapsed_ms) : "") +
           "\r\n";
  }
  return out;
}

std::string to_markdown(std::span<const TheoremCheck> checks, const ReportOptions& options) {
  std::string out = "# Verification report\n\n";
  out += "| theorem_id | corpus | instances | passes | skipped | failures |";
  out += options.include_timing ? " elapsed_ms |\n" : "\n";
  out += "|---|---|---:|---:|---:|---:|";
  out += options.include_timing ? "---:|\n" : "\n";
  for (const TheoremCheck& c : checks) {
    out += "| " + std::string(to_string(c.id)) + " | " + markdown_cell(c.corpus) + " | " +
           std::to_string(c.instances) + " | " + std::to_string(c.passes) + " | " + std::to_string(c.skipped) + " | " +
           std::to_string(c.failure_count) + " |";
    out += options.include_timing ? " " + fixed_ms(c.elapsed_ms) + " |\n" : "\n";
  }
  out += "\n## Statements\n\n| theorem_id | statement |\n|---|---|\n";
  for (const TheoremCheck& c : checks) {
    out += "| " + std::string(to_string(c.id)) + " | " + markdown_cell(theorem_statement(c.id)) + " |\n";
  }
  bool any_failure = false;
  for (const TheoremCheck& c : checks) {
    if (c.failures.empty()) continue;
    if (!any_failure) out += "\n## Failures\n\n";
    any_failure = true;
    for (const Failure& f : c.failures) {
      out += "- " + std::string(to_string(c.id));
      for (const std::string& g : f.graphs) out += " `` " + g + " ``";
      out += ": expected " + f.expected + ", got " + f.got + "\n";
    }
  }
  return out;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "markdown" || name == "md") return ReportFormat::markdown;
  throw std::invalid_argument("unknown report format: " + std::string(name));
}

std::string report(std::span<const TheoremCheck> checks, ReportFormat format, const ReportOptions& options) {
  switch (format) {
    case ReportFormat::json: return to_json(checks, options);
    case ReportFormat::csv: return to_csv(checks, options);
    case ReportFormat::markdown: return to_markdown(checks, options);
  }
  return {};
}

}  // namespace superdom
