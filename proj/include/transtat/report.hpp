#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "transtat/check.hpp"
#include "transtat/classify.hpp"
#include "transtat/hilbert.hpp"
#include "transtat/model_io.hpp"

namespace transtat::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

nlohmann::json check_to_json(const CheckReport& check);
nlohmann::json series_to_json(const hilbert::SeriesCoeffs& series);
nlohmann::json classification_to_json(const classify::Classification& c);

/// Report skeleton shared by every command; checks/series blocks are added
/// by the command, the timing block last.
nlohmann::json make_report(const std::string& command, const ModelFile& file);
void add_check(nlohmann::json& report, const CheckReport& check);
void finish_report(nlohmann::json& report, double seconds);

/// Writes via a temp file in the same directory followed by a rename.
void write_report_atomic(const nlohmann::json& report, const std::string& path);

/// Human-readable summary derived from the JSON document (never computed
/// separately from it).
void print_summary(const nlohmann::json& report, std::ostream& out);

/// True when every entry of report["checks"] passed.
bool all_checks_passed(const nlohmann::json& report);

}  // namespace transtat::cli
