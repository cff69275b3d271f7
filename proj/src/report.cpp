#include "dehn/report.hpp"

namespace dehn {

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::ok: return "ok";
    case ReportStatus::fail: return "fail";
    case ReportStatus::indeterminate: return "indeterminate";
  }
  return "fail";
}

ReportStatus worst(ReportStatus a, ReportStatus b) {
  auto rank = [](ReportStatus s) { return s == ReportStatus::ok ? 0 : s == ReportStatus::indeterminate ? 1 : 2; };
  return rank(a) >= rank(b) ? a : b;
}

int exit_code(ReportStatus s) {
  switch (s) {
    case ReportStatus::ok: return 0;
    case ReportStatus::fail: return 1;
    case ReportStatus::indeterminate: return 3;
  }
  return 1;
}

namespace {

std::string tsv_cell(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return out;
}

}  // namespace

std::string emit_report(const Report& report, Format format) {
  if (format == Format::json) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = report.command;
    j["status"] = to_string(report.status);
    j["results"] = report.results;
    return j.dump(2) + "\n";
  }
  std::string out = "# schema_version=" + std::string(kSchemaVersion) + " status=" + to_string(report.status) +
                    " command=";
  for (std::size_t i = 0; i < report.command.size(); ++i) out += (i ? " " : "") + tsv_cell(report.command[i]);
  out += "\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "\t" : "") + tsv_cell(cells[i]);
    out += "\n";
  };
  line(report.columns);
  for (const auto& r : report.rows) line(r);
  return out;
}

}  // namespace dehn
