#include "transtat/report.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "transtat/errors.hpp"

namespace transtat::cli {

using nlohmann::json;

namespace {

json rationals_to_json(const RationalVector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(rational_to_string(x));
  return arr;
}

long long to_int64(const Integer& value) {
  if (value > Integer(std::numeric_limits<long long>::max()) ||
      value < Integer(std::numeric_limits<long long>::min()))
    throw Error("report: integer out of int64 range");
  return value.convert_to<long long>();
}

}  // namespace

json check_to_json(const CheckReport& check) {
  json doc{{"name", check.name},
           {"passed", check.passed},
           {"residual_zero", check.residual_zero},
           {"details", check.details}};
  if (check.witness) {
    doc["witness"] = json{{"context", check.witness->context},
                          {"input", rationals_to_json(check.witness->input)},
                          {"difference", rationals_to_json(check.witness->difference)}};
  }
  return doc;
}

json series_to_json(const hilbert::SeriesCoeffs& series) {
  json coeffs = json::array();
  for (const auto& c : series.coeffs) coeffs.push_back(to_int64(c));
  json doc{{"coeffs", coeffs}};
  if (series.terminated_at)
    doc["terminated_at"] = *series.terminated_at;
  else
    doc["terminated_at"] = nullptr;
  return doc;
}

json classification_to_json(const classify::Classification& c) {
  json signature = json::array();
  for (const auto& q : c.signature) signature.push_back(q.str());
  return json{{"kind", classify::kind_name(c.kind)},
              {"signature", signature},
              {"certificate", c.certificate}};
}

json make_report(const std::string& command, const ModelFile& file) {
  return json{{"schema_version", kReportSchemaVersion},
              {"tool_version", kToolVersion},
              {"command", command},
              {"model", file.echo},
              {"checks", json::array()}};
}

void add_check(json& report, const CheckReport& check) {
  report["checks"].push_back(check_to_json(check));
}

void finish_report(json& report, double seconds) {
  report["timing"] = json{{"seconds", seconds}};
}

void write_report_atomic(const json& report, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write report to '" + tmp + "'");
    out << report.dump(2) << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error("cannot rename report into place at '" + path + "'");
  }
}

void print_summary(const json& report, std::ostream& out) {
  out << "command: " << report.value("command", "?") << "\n";
  if (report.contains("rank")) {
    const auto& rank = report.at("rank");
    out << "  ranks: w_sym " << rank.value("sym", -1) << ", w_ext "
        << rank.value("ext", -1) << ", p_gen " << rank.value("p_gen", -1) << "\n";
  }
  if (report.contains("series")) {
    for (const auto& [name, series] : report.at("series").items()) {
      out << "  series " << name << ": [";
      const auto& coeffs = series.at("coeffs");
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        out << (i ? "," : "") << coeffs[i].get<long long>();
      out << "]";
      if (!series.at("terminated_at").is_null())
        out << " terminated at " << series.at("terminated_at").get<std::size_t>();
      out << "\n";
    }
  }
  if (report.contains("classification")) {
    const auto& c = report.at("classification");
    out << "  classification: " << c.at("kind").get<std::string>() << " [";
    const auto& sig = c.at("signature");
    for (std::size_t i = 0; i < sig.size(); ++i)
      out << (i ? "," : "") << sig[i].get<std::string>();
    out << "]\n";
  }
  if (report.contains("dual")) {
    const auto& dual = report.at("dual");
    out << "  dual: r_perp dim " << dual.value("r_perp_dim", -1) << "\n";
  }
  if (report.contains("fock")) {
    const auto& fk = report.at("fock");
    out << "  level dims: [";
    const auto& dims = fk.at("level_dims");
    for (std::size_t i = 0; i < dims.size(); ++i)
      out << (i ? "," : "") << dims[i].get<std::size_t>();
    out << "]\n";
  }
  if (report.contains("admissible")) {
    const auto& adm = report.at("admissible");
    out << "  admissible: |S2| = " << adm.at("s2").size()
        << ", |S3| = " << adm.value("s3_count", std::size_t{0})
        << ", dim W_3 = " << adm.value("w3_dim", std::size_t{0}) << "\n";
  }
  for (const auto& check : report.at("checks")) {
    out << "  [" << (check.at("passed").get<bool>() ? "pass" : "FAIL") << "] "
        << check.at("name").get<std::string>();
    const std::string details = check.value("details", "");
    if (!details.empty()) out << " - " << details;
    out << "\n";
  }
}

bool all_checks_passed(const json& report) {
  for (const auto& check : report.at("checks"))
    if (!check.at("passed").get<bool>()) return false;
  return true;
}

}  // namespace transtat::cli
