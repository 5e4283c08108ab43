#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "transtat/commands.hpp"
#include "transtat/guard.hpp"
#include "transtat/report.hpp"

namespace {

void add_common(CLI::App* cmd, transtat::cli::CommandOptions& opts) {
  cmd->add_option("model", opts.model_path, "model file (JSON)")->required();
  cmd->add_option("--degree", opts.degree, "truncation degree (default: model n_max)");
  cmd->add_option("--out", opts.out_path, "write the JSON report to this path");
  cmd->add_option("--replay", opts.replay_path,
                  "verify the witnesses of a previously written report");
  cmd->add_option("--guard-dim", opts.guard_dim,
                  "override the global dimension guard");
}

}  // namespace

int main(int argc, char** argv) {
  using transtat::cli::CommandOptions;
  using transtat::cli::PresetOptions;

  if (const char* env = std::getenv("TRANSTAT_GUARD_DIM")) {
    transtat::guard::set_limit(std::strtoull(env, nullptr, 10));
  }

  CLI::App app{"exact workbench for quadratic exchange statistics"};
  app.set_version_flag("--version", transtat::cli::kToolVersion);
  app.require_subcommand(1);

  CommandOptions validate_opts, yb_opts, hilbert_opts, classify_opts, koszul_opts,
      fock_opts, all_opts;
  PresetOptions preset_opts;

  add_common(app.add_subcommand("validate", "parse and validate a model file"),
             validate_opts);
  add_common(app.add_subcommand("yb", "braid and rewriting consistency checks"),
             yb_opts);
  auto* hilbert =
      app.add_subcommand("hilbert", "graded dimension series and factorization");
  add_common(hilbert, hilbert_opts);
  hilbert->add_option("--mode", hilbert_opts.mode, "single | full | both")
      ->check(CLI::IsMember({"single", "full", "both"}));
  auto* classify = app.add_subcommand("classify", "series classification");
  add_common(classify, classify_opts);
  classify->add_option("--max-fit", classify_opts.max_fit,
                       "maximal reciprocal-fit degree (default: degree/2)");
  classify->add_flag("--rational-fit", classify_opts.rational_fit,
                     "also report a Pade-style rational fit of the series");
  add_common(app.add_subcommand("koszul", "dual relations, dual series, identity"),
             koszul_opts);
  add_common(app.add_subcommand("fock", "truncated realization and operator checks"),
             fock_opts);
  add_common(app.add_subcommand("report-all", "full pipeline, one report"), all_opts);

  auto* preset = app.add_subcommand("preset", "emit a built-in model file");
  preset->add_option("name", preset_opts.name,
                     "boson | fermion | example_sec5 | example_sec5_completed")
      ->required();
  preset->add_option("--d", preset_opts.d, "external mode count (preset default if 0)");
  preset->add_option("--n-max", preset_opts.n_max, "truncation degree");
  preset->add_option("--out", preset_opts.out_path, "write to this path");

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand("validate"))
    return transtat::cli::cmd_validate(validate_opts, std::cout, std::cerr);
  if (app.got_subcommand("yb"))
    return transtat::cli::cmd_yb(yb_opts, std::cout, std::cerr);
  if (app.got_subcommand("hilbert"))
    return transtat::cli::cmd_hilbert(hilbert_opts, std::cout, std::cerr);
  if (app.got_subcommand("classify"))
    return transtat::cli::cmd_classify(classify_opts, std::cout, std::cerr);
  if (app.got_subcommand("koszul"))
    return transtat::cli::cmd_koszul(koszul_opts, std::cout, std::cerr);
  if (app.got_subcommand("fock"))
    return transtat::cli::cmd_fock(fock_opts, std::cout, std::cerr);
  if (app.got_subcommand("report-all"))
    return transtat::cli::cmd_report_all(all_opts, std::cout, std::cerr);
  if (app.got_subcommand("preset"))
    return transtat::cli::cmd_preset(preset_opts, std::cout, std::cerr);
  return transtat::cli::kExitInputError;
}
