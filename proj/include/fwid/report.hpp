#pragma once

#include <string>
#include <vector>

#include "fwid/harness.hpp"

namespace fwid {

enum class ReportFormat { Json, Csv, Table };
/// "json", "csv" or "table"; throws std::invalid_argument otherwise.
ReportFormat parse_format(const std::string& s);

/// Keys in fixed order, complex values as {"re":..,"im":..}, rel_err as %.16e.
/// wall_time_s is the last key of each report and sits on its own line.
std::string to_json(const VerificationReport& r);
/// JSON array of reports.
std::string to_json(const std::vector<VerificationReport>& rs);

/// Header plus one row per trial.
std::string to_csv(const VerificationReport& r);
std::string to_csv(const std::vector<VerificationReport>& rs);

/// Per-trial table ending in a summary line.
std::string to_table(const VerificationReport& r);
/// One summary line per report and a total.
std::string to_table(const std::vector<VerificationReport>& rs);

std::string format_report(const VerificationReport& r, ReportFormat f);
std::string format_reports(const std::vector<VerificationReport>& rs, ReportFormat f);

/// Throws IoError naming the path.
void write_report(const VerificationReport& r, const std::string& path, ReportFormat f);
void write_reports(const std::vector<VerificationReport>& rs, const std::string& path, ReportFormat f);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
VerificationReport report_from_json(const std::string& text);
std::vector<VerificationReport> reports_from_json(const std::string& text);

/// Text without the wall_time_s lines, for reproducibility comparisons.
std::string strip_wall_time(const std::string& json);

}  // namespace fwid
