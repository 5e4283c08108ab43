#include "transtat/commands.hpp"

#include <chrono>
#include <fstream>
#include <ostream>

#include "transtat/braid.hpp"
#include "transtat/classify.hpp"
#include "transtat/errors.hpp"
#include "transtat/fock.hpp"
#include "transtat/guard.hpp"
#include "transtat/hilbert.hpp"
#include "transtat/koszul.hpp"
#include "transtat/model_io.hpp"
#include "transtat/report.hpp"

namespace transtat::cli {

namespace {

using nlohmann::json;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void apply_guard(const CommandOptions& opts, const ModelFile& file) {
  if (opts.guard_dim)
    guard::set_limit(*opts.guard_dim);
  else if (file.guard_dim)
    guard::set_limit(*file.guard_dim);
}

std::size_t effective_degree(const CommandOptions& opts, const ModelFile& file) {
  return opts.degree.value_or(file.model.n_max);
}

// Shared per-command skeleton: load, run, summarize, write, map exceptions
// onto the exit-code contract.
template <typename Body>
int run_command(const std::string& name, const CommandOptions& opts,
                std::ostream& out, std::ostream& err, Body&& body) {
  Timer timer;
  try {
    const ModelFile file = load_model_file(opts.model_path);
    apply_guard(opts, file);
    if (opts.replay_path) return replay_report(opts.model_path, *opts.replay_path, out, err);
    json report = make_report(name, file);
    report["options"] = json{{"degree", effective_degree(opts, file)},
                             {"mode", opts.mode}};
    body(file, report);
    finish_report(report, timer.seconds());
    if (opts.out_path) write_report_atomic(report, *opts.out_path);
    print_summary(report, out);
    return all_checks_passed(report) ? kExitPass : kExitCheckFailed;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const GuardError& e) {
    err << "guard error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

void add_validate_blocks(json& report, const ModelFile& file,
                         const statmodel::RelationSet& rs) {
  report["rank"] = json{{"sym", file.model.w_sym.dim()},
                        {"ext", file.model.w_ext.dim()},
                        {"p_gen", rs.r_gen.dim()}};
  add_check(report,
            exactla::is_projector(rs.p_gen, rs.gram2)
                ? CheckReport::pass("p_gen_projector",
                                    "idempotent and self-adjoint for the product form")
                : CheckReport::fail_plain("p_gen_projector",
                                          "projector conditions violated"));
  const std::size_t expected = file.model.d * (file.model.d + 1) / 2 *
                                   file.model.w_sym.dim() +
                               file.model.d * (file.model.d - 1) / 2 *
                                   file.model.w_ext.dim();
  add_check(report, rs.r_gen.dim() == expected
                        ? CheckReport::pass("rank_bookkeeping",
                                            "rank(P_gen) = " +
                                                std::to_string(rs.r_gen.dim()))
                        : CheckReport::fail_plain(
                              "rank_bookkeeping",
                              "rank " + std::to_string(rs.r_gen.dim()) +
                                  " differs from expected " +
                                  std::to_string(expected)));
  // Span of the relation-vector family must reproduce R_gen exactly.
  const auto vectors = statmodel::relation_vectors(rs, file.model);
  const Subspace span = Subspace::from_spanning(
      RationalMatrix::from_rows(rs.ambient, vectors));
  add_check(report, span == rs.r_gen
                        ? CheckReport::pass("relation_vector_span",
                                            "relation vectors span R_gen")
                        : CheckReport::fail_plain("relation_vector_span",
                                                  "span differs from R_gen"));
}

void add_yb_blocks(json& report, const ModelFile& file,
                   const statmodel::RelationSet& rs) {
  const braid::BraidReport braids = braid::run_all(file.model, rs);
  json s2 = json::array();
  for (const auto& [a, b] : braids.admissible.s2) s2.push_back(json::array({a, b}));
  report["admissible"] = json{{"s2", s2},
                              {"s3_count", braids.admissible.s3.size()},
                              {"w3_dim", braids.w3_dim}};
  add_check(report, braids.global_yb);
  add_check(report, braids.internal_sym);
  add_check(report, braids.internal_ext);
  add_check(report, braids.pbw_cubic);
  add_check(report, braids.alarm_decoupling);
  add_check(report, braids.alarm_yb_vs_pbw);
}

void add_hilbert_blocks(json& report, const ModelFile& file,
                        const statmodel::RelationSet& rs, std::size_t degree,
                        const std::string& mode) {
  report["series"] = json::object();
  std::optional<hilbert::SeriesCoeffs> single;
  std::optional<hilbert::SeriesCoeffs> full;
  if (mode == "single" || mode == "both") {
    single = hilbert::single_mode_series(file.model, degree);
    report["series"]["single"] = series_to_json(*single);
  }
  if (mode == "full" || mode == "both") {
    full = hilbert::full_series(file.model, rs, degree);
    report["series"]["full"] = series_to_json(*full);
  }
  if (single && full) {
    add_check(report,
              hilbert::compare_factorization(*single, *full, file.model.d, degree));
  }
}

void add_classify_blocks(json& report, const ModelFile& file, std::size_t degree,
                         std::size_t max_fit, bool with_rational_fit) {
  const hilbert::SeriesCoeffs series = hilbert::single_mode_series(file.model, degree);
  report["series"]["single"] = series_to_json(series);
  const classify::Classification result = classify::classify_series(series, max_fit);
  report["classification"] = classification_to_json(result);
  if (result.kind == classify::Kind::indeterminate) {
    add_check(report, CheckReport::fail_plain("classification_certified",
                                              result.certificate));
  } else {
    add_check(report, CheckReport::pass("classification_certified",
                                        classify::kind_name(result.kind) +
                                            (" with certificate: " + result.certificate)));
    // Round trip: expanding the certified polynomial reproduces the series.
    std::vector<Integer> expanded;
    if (result.kind == classify::Kind::transfermionic) {
      expanded = classify::expand_rational(classify::IntPoly(result.signature),
                                           classify::IntPoly({Integer(1)}), degree);
    } else {
      expanded = classify::expand_rational(classify::IntPoly({Integer(1)}),
                                           classify::IntPoly(result.signature), degree);
    }
    bool match = expanded.size() == series.coeffs.size();
    for (std::size_t n = 0; match && n < expanded.size(); ++n)
      match = expanded[n] == series.coeffs[n];
    add_check(report, match
                          ? CheckReport::pass("classification_round_trip",
                                              "expansion reproduces the series")
                          : CheckReport::fail_plain("classification_round_trip",
                                                    "expansion differs from series"));
  }
  if (with_rational_fit) {
    const auto fit =
        classify::rational_fit(series.coeffs, degree / 2, degree / 2);
    if (fit) {
      json num = json::array();
      json den = json::array();
      for (const auto& c : fit->numerator.coeffs) num.push_back(c.str());
      for (const auto& c : fit->denominator.coeffs) den.push_back(c.str());
      report["rational_fit"] = json{{"numerator", num}, {"denominator", den}};
    } else {
      report["rational_fit"] = nullptr;
    }
  }
}

void add_koszul_blocks(json& report, const ModelFile& file,
                       const statmodel::RelationSet& rs, std::size_t degree) {
  const koszul::DualData single_dual =
      koszul::dual_relations_single_mode(file.model);
  const koszul::DualData full_dual = koszul::dual_relations(rs, file.model.h_gram());
  report["dual"] = json{
      {"r_perp_dim", full_dual.r_perp.dim()},
      {"single_mode_r_perp_dim", single_dual.r_perp.dim()},
      {"ambient", rs.ambient}};
  const hilbert::SeriesCoeffs series = hilbert::single_mode_series(file.model, degree);
  const hilbert::SeriesCoeffs dual_series =
      koszul::dual_series(single_dual, file.model.k_dim, degree);
  report["series"]["single"] = series_to_json(series);
  report["series"]["single_dual"] = series_to_json(dual_series);
  add_check(report, koszul::check_koszul_identity(series, dual_series, degree));
  // Double dual must reproduce the original relation subspace.
  const koszul::DualData dd =
      koszul::dual_of(single_dual.r_perp, file.model.g);
  add_check(report, dd.r_perp == file.model.w_sym
                        ? CheckReport::pass("double_dual",
                                            "dual of the dual reproduces W_sym")
                        : CheckReport::fail_plain("double_dual",
                                                  "double dual differs from W_sym"));
}

void add_fock_blocks(json& report, const ModelFile& file,
                     const statmodel::RelationSet& rs, std::size_t degree) {
  const fock::FockRealization realization =
      fock::build_fock(file.model, rs, degree);
  const fock::OperatorTable ops(realization);
  json dims = json::array();
  for (const auto dim : realization.level_dims()) dims.push_back(dim);
  report["fock"] = json{{"level_dims", dims}, {"total_dim", realization.total_dim()}};
  add_check(report, fock::vacuum_two_point(ops));
  add_check(report, fock::check_quadratic_kill(ops, rs));
  const auto js = fock::gld_generators(ops);
  add_check(report, fock::check_gld(ops, js));
  add_check(report, fock::check_number_operator(ops, js));
  if (file.exchange.a && file.exchange.b)
    add_check(report, fock::check_ab_bracket(ops, file.exchange));
  if (file.exchange.c || file.exchange.s || file.exchange.r)
    add_check(report, fock::check_exchange_consistency(ops, file.exchange));
}

}  // namespace

int cmd_validate(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return run_command("validate", opts, out, err,
                     [&](const ModelFile& file, json& report) {
                       const auto rs = statmodel::assemble_pgen(file.model);
                       add_validate_blocks(report, file, rs);
                     });
}

int cmd_yb(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return run_command("yb", opts, out, err,
                     [&](const ModelFile& file, json& report) {
                       const auto rs = statmodel::assemble_pgen(file.model);
                       add_yb_blocks(report, file, rs);
                     });
}

int cmd_hilbert(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.mode != "single" && opts.mode != "full" && opts.mode != "both") {
    err << "input error: --mode must be single, full or both\n";
    return kExitInputError;
  }
  return run_command("hilbert", opts, out, err,
                     [&](const ModelFile& file, json& report) {
                       const auto rs = statmodel::assemble_pgen(file.model);
                       add_hilbert_blocks(report, file, rs,
                                          effective_degree(opts, file), opts.mode);
                     });
}

int cmd_classify(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return run_command(
      "classify", opts, out, err, [&](const ModelFile& file, json& report) {
        const std::size_t degree = effective_degree(opts, file);
        report["series"] = json::object();
        add_classify_blocks(report, file, degree,
                            opts.max_fit.value_or(degree / 2), opts.rational_fit);
      });
}

int cmd_koszul(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return run_command("koszul", opts, out, err,
                     [&](const ModelFile& file, json& report) {
                       const auto rs = statmodel::assemble_pgen(file.model);
                       report["series"] = json::object();
                       add_koszul_blocks(report, file, rs,
                                         effective_degree(opts, file));
                     });
}

int cmd_fock(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return run_command("fock", opts, out, err,
                     [&](const ModelFile& file, json& report) {
                       const auto rs = statmodel::assemble_pgen(file.model);
                       add_fock_blocks(report, file, rs,
                                       effective_degree(opts, file));
                     });
}

int cmd_report_all(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return run_command("report-all", opts, out, err,
                     [&](const ModelFile& file, json& report) {
                       const std::size_t degree = effective_degree(opts, file);
                       const auto rs = statmodel::assemble_pgen(file.model);
                       add_validate_blocks(report, file, rs);
                       add_yb_blocks(report, file, rs);
                       add_hilbert_blocks(report, file, rs, degree, "both");
                       add_classify_blocks(report, file, degree, degree / 2, false);
                       add_koszul_blocks(report, file, rs, degree);
                       add_fock_blocks(report, file, rs, degree);
                     });
}

int cmd_preset(const PresetOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    statmodel::StatModel model = statmodel::preset(opts.name, opts.d);
    if (opts.n_max) model.n_max = *opts.n_max;
    model.validate();
    const json doc = model_to_json(model);
    if (opts.out_path) {
      write_model_file(*opts.out_path, model);
      out << "wrote preset '" << opts.name << "' to " << *opts.out_path << "\n";
    } else {
      out << doc.dump(2) << "\n";
    }
    return kExitPass;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int replay_report(const std::string& model_path, const std::string& report_path,
                  std::ostream& out, std::ostream& err) {
  try {
    const ModelFile file = load_model_file(model_path);
    std::ifstream in(report_path);
    if (!in) throw ParseError("cannot open report '" + report_path + "'");
    json stored;
    try {
      in >> stored;
    } catch (const json::exception& e) {
      throw ParseError("invalid JSON in '" + report_path + "': " + e.what());
    }
    if (!stored.contains("checks"))
      throw ParseError("report has no checks block");
    const std::size_t degree =
        stored.contains("options") && stored["options"].contains("degree")
            ? stored["options"]["degree"].get<std::size_t>()
            : file.model.n_max;
    const std::string mode =
        stored.contains("options") && stored["options"].contains("mode")
            ? stored["options"]["mode"].get<std::string>()
            : std::string("both");

    // Deterministically re-derive every block the stored report contains.
    json fresh = make_report(stored.value("command", "report-all"), file);
    const auto rs = statmodel::assemble_pgen(file.model);
    if (stored.contains("rank")) add_validate_blocks(fresh, file, rs);
    if (stored.contains("admissible")) add_yb_blocks(fresh, file, rs);
    if (stored.contains("series") &&
        (stored["series"].contains("full") || stored["series"].contains("single")))
      add_hilbert_blocks(fresh, file, rs, degree,
                         stored["series"].contains("full") &&
                                 stored["series"].contains("single")
                             ? "both"
                             : (stored["series"].contains("full") ? "full" : "single"));
    if (stored.contains("classification"))
      add_classify_blocks(fresh, file, degree, degree / 2, false);
    if (stored.contains("dual")) add_koszul_blocks(fresh, file, rs, degree);
    if (stored.contains("fock")) add_fock_blocks(fresh, file, rs, degree);
    (void)mode;

    bool all_reproduced = true;
    std::size_t with_witness = 0;
    for (const auto& check : stored["checks"]) {
      if (!check.contains("witness")) continue;
      ++with_witness;
      const std::string name = check["name"].get<std::string>();
      bool reproduced = false;
      for (const auto& candidate : fresh["checks"]) {
        if (candidate["name"] != name) continue;
        reproduced = candidate.contains("witness") &&
                     candidate["witness"] == check["witness"];
        break;
      }
      out << "witness " << name << ": "
          << (reproduced ? "reproduced" : "NOT reproduced") << "\n";
      all_reproduced = all_reproduced && reproduced;
    }
    if (with_witness == 0) out << "report carries no witnesses\n";
    return all_reproduced ? kExitPass : kExitCheckFailed;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace transtat::cli
