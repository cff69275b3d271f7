#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace dehn {

inline constexpr const char* kSchemaVersion = "dehncalc/1";

enum class ReportStatus { ok, fail, indeterminate };

std::string to_string(ReportStatus s);

/// ok < indeterminate < fail.
ReportStatus worst(ReportStatus a, ReportStatus b);

/// Exit code for a finished command: 0 ok, 1 fail, 3 indeterminate.
int exit_code(ReportStatus s);

struct Report {
  std::vector<std::string> command;
  ReportStatus status = ReportStatus::ok;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  // Flat view for TSV output, one row per record.
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void note(ReportStatus s) { status = worst(status, s); }
};

enum class Format { json, tsv };

/// JSON: {"schema_version", "command", "status", "results"} in that order.
/// TSV: a "#"-prefixed line with schema version, status and command, then a
/// header row of column names, then one row per record.
std::string emit_report(const Report& report, Format format);

}  // namespace dehn
