#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "transtat/fock.hpp"
#include "transtat/statmodel.hpp"

namespace transtat::cli {

/// Parsed model file: the declaration plus optional exchange tensors and
/// guard settings.  `echo` is the canonical re-serialization of the parsed
/// content, embedded in reports.
struct ModelFile {
  int schema_version = 1;
  statmodel::StatModel model;
  fock::ExchangeData exchange;
  std::optional<std::size_t> guard_dim;
  nlohmann::json echo;
};

/// Parses and validates; errors carry the offending field path.
ModelFile parse_model_json(const nlohmann::json& doc);
ModelFile load_model_file(const std::string& path);

nlohmann::json model_to_json(const statmodel::StatModel& model,
                             const fock::ExchangeData& exchange = {});
void write_model_file(const std::string& path, const statmodel::StatModel& model,
                      const fock::ExchangeData& exchange = {});

}  // namespace transtat::cli
