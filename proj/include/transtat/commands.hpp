#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace transtat::cli {

/// Exit codes shared by every command: 0 all checks pass, 1 a mathematical
/// check failed (witnesses serialized), 2 input or validation error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

struct CommandOptions {
  std::string model_path;
  std::optional<std::size_t> degree;       // defaults to the model's n_max
  std::string mode = "both";               // hilbert: single | full | both
  std::optional<std::size_t> max_fit;      // classify fit degree cap
  bool rational_fit = false;               // classify exploration variant
  std::optional<std::string> out_path;     // write the JSON report here
  std::optional<std::string> replay_path;  // verify witnesses from this report
  std::optional<std::size_t> guard_dim;    // overrides the dimension guard
};

int cmd_validate(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_yb(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_hilbert(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_classify(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_koszul(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_fock(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_report_all(const CommandOptions& opts, std::ostream& out, std::ostream& err);

struct PresetOptions {
  std::string name;
  std::size_t d = 0;  // 0 keeps the preset default
  std::optional<std::size_t> n_max;
  std::optional<std::string> out_path;
};
int cmd_preset(const PresetOptions& opts, std::ostream& out, std::ostream& err);

/// Re-evaluates every witness stored in the report against the model file;
/// returns kExitPass iff each reproduces its stored difference exactly.
int replay_report(const std::string& model_path, const std::string& report_path,
                  std::ostream& out, std::ostream& err);

}  // namespace transtat::cli
