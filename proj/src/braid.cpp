#include "transtat/braid.hpp"

#include <algorithm>
#include <string>

#include "transtat/errors.hpp"
#include "transtat/exactla.hpp"
#include "transtat/guard.hpp"
#include "transtat/hilbert.hpp"

namespace transtat::braid {

namespace {

using exactla::kron;
using kernels::multiply;

struct BraidSides {
  RationalMatrix lhs;
  RationalMatrix rhs;
};

// (A12)(A23)(A12) and (A23)(A12)(A23) on V^3 for A acting on V^2.
BraidSides braid_sides(const RationalMatrix& op, std::size_t base) {
  const RationalMatrix id = RationalMatrix::identity(base);
  const RationalMatrix a12 = kron(op, id);
  const RationalMatrix a23 = kron(id, op);
  BraidSides sides;
  sides.lhs = multiply(multiply(a12, a23), a12);
  sides.rhs = multiply(multiply(a23, a12), a23);
  return sides;
}

// First basis vector on which the difference is nonzero.
Witness column_witness(const RationalMatrix& diff, nlohmann::json context) {
  for (std::size_t c = 0; c < diff.cols(); ++c) {
    RationalVector col = diff.col_vector(c);
    if (std::any_of(col.begin(), col.end(),
                    [](const Rational& x) { return !x.is_zero(); })) {
      Witness w;
      context["basis_index"] = c;
      w.context = std::move(context);
      RationalVector input(diff.cols());
      input[c] = 1;
      w.input = std::move(input);
      w.difference = std::move(col);
      return w;
    }
  }
  throw Error("column_witness called on a zero difference");
}

CheckReport braid_check(const std::string& name, const RationalMatrix& op,
                        std::size_t base, nlohmann::json context,
                        std::string extra_details) {
  const BraidSides sides = braid_sides(op, base);
  const RationalMatrix diff = sides.lhs - sides.rhs;
  if (diff.is_zero()) {
    return CheckReport::pass(name, "exact identity on dimension " +
                                       std::to_string(diff.rows()) +
                                       (extra_details.empty() ? "" : "; ") +
                                       extra_details);
  }
  Witness w = column_witness(diff, std::move(context));
  return CheckReport::fail(name, std::move(w),
                           "sides differ on dimension " + std::to_string(diff.rows()) +
                               (extra_details.empty() ? "" : "; ") + extra_details);
}

}  // namespace

CheckReport check_global_yb(const statmodel::RelationSet& rs) {
  const std::size_t m = rs.d * rs.k_dim;
  guard::checked_power(m, 3, "check_global_yb");
  const RationalMatrix reflection =
      RationalMatrix::identity(rs.ambient) - Rational(2) * rs.p_gen;
  // Secondary diagnostic: the literal projector identity.
  const BraidSides proj_sides = braid_sides(rs.p_gen, m);
  const bool projector_form_holds = (proj_sides.lhs == proj_sides.rhs);
  std::string extra = std::string("literal projector form P12 P23 P12 = P23 P12 P23 ") +
                      (projector_form_holds ? "holds" : "does not hold");
  nlohmann::json context = {{"check", "global_yb"},
                            {"operator", "reflection (id - 2 P_gen)"},
                            {"space_dim", m * m * m}};
  return braid_check("global_yb", reflection, m, std::move(context), std::move(extra));
}

std::pair<CheckReport, CheckReport> check_internal_braids(
    const statmodel::StatModel& model) {
  const RationalMatrix gram_kk = kron(model.g, model.g);
  const RationalMatrix p_sym = exactla::orthogonal_projector(model.w_sym, gram_kk);
  const RationalMatrix p_ext = exactla::orthogonal_projector(model.w_ext, gram_kk);
  guard::checked_power(model.k_dim, 3, "check_internal_braids");
  CheckReport sym = braid_check(
      "internal_braid_sym", p_sym, model.k_dim,
      {{"check", "internal_braid_sym"}, {"operator", "projector"}}, "");
  CheckReport ext = braid_check(
      "internal_braid_ext", p_ext, model.k_dim,
      {{"check", "internal_braid_ext"}, {"operator", "projector"}}, "");
  return {std::move(sym), std::move(ext)};
}

AdmissibleSets build_admissible(const statmodel::StatModel& model,
                                const statmodel::RelationSet& rs) {
  const std::size_t m = model.h_dim();
  const std::size_t amb = m * m;

  // Rank of a generator in the declared order.
  std::vector<std::size_t> rank_of(m);
  for (std::size_t r = 0; r < m; ++r) rank_of[model.order[r]] = r;

  // Pair monomials sorted by decreasing order-rank, so elimination pivots on
  // the largest monomial of each relation.
  std::vector<std::size_t> columns(amb);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      columns[(m - 1 - rank_of[a]) * m + (m - 1 - rank_of[b])] = a * m + b;

  const RationalMatrix& basis = rs.r_gen.basis();
  RationalMatrix permuted(basis.rows(), amb);
  for (std::size_t r = 0; r < basis.rows(); ++r)
    for (std::size_t c = 0; c < amb; ++c) permuted.at(r, c) = basis.at(r, columns[c]);

  const auto reduced = exactla::rref(permuted);
  std::vector<bool> pivot_flat(amb, false);
  for (const auto p : reduced.pivots) pivot_flat[columns[p]] = true;

  AdmissibleSets sets;
  sets.reduction = RationalMatrix::identity(amb);
  for (std::size_t flat = 0; flat < amb; ++flat) {
    if (!pivot_flat[flat]) sets.s2.emplace_back(flat / m, flat % m);
  }
  // Each eliminated row reads: monomial(pivot) + Σ c_u · monomial(u) = 0 with
  // every u admissible and strictly smaller; that is the rewriting rule.
  for (std::size_t r = 0; r < reduced.pivots.size(); ++r) {
    const std::size_t target = columns[reduced.pivots[r]];
    sets.reduction.at(target, target) = 0;
    for (std::size_t c = reduced.pivots[r] + 1; c < amb; ++c) {
      const Rational& coeff = reduced.matrix.at(r, c);
      if (!coeff.is_zero()) sets.reduction.at(columns[c], target) = -coeff;
    }
  }
  // The reduction map must be idempotent with image the admissible span.
  if (multiply(sets.reduction, sets.reduction) != sets.reduction)
    throw Error("build_admissible: reduction map is not idempotent");

  for (const auto& [a, b] : sets.s2)
    for (const auto& [b2, c] : sets.s2)
      if (b == b2) sets.s3.push_back({a, b, c});
  return sets;
}

RationalVector normal_form_degree3(const RationalMatrix& reduction,
                                   std::size_t base_dim, RationalVector v,
                                   bool left_first) {
  constexpr std::size_t kMaxSteps = 10000;
  for (std::size_t step = 0; step < kMaxSteps; ++step) {
    const std::size_t first = left_first ? 1 : 2;
    const std::size_t second = left_first ? 2 : 1;
    RationalVector a = exactla::apply_at_position(reduction, base_dim, 3, first, v);
    RationalVector b = exactla::apply_at_position(reduction, base_dim, 3, second, a);
    if (b == v) return v;
    v = std::move(b);
  }
  throw Error("normal_form_degree3: rewriting did not terminate");
}

CheckReport pbw_cubic_check(const statmodel::StatModel& model,
                            const statmodel::RelationSet& rs) {
  const std::size_t m = model.h_dim();
  const std::size_t amb3 = guard::checked_power(m, 3, "pbw_cubic_check");
  AdmissibleSets sets = build_admissible(model, rs);
  const std::size_t w3 =
      hilbert::graded_kernels(rs.p_gen, m, 3).back().dim();

  const BraidSides sides = braid_sides(sets.reduction, m);
  const bool braid_ok = (sides.lhs == sides.rhs);
  const bool count_ok = (sets.s3.size() == w3);

  const std::string summary = "|S3| = " + std::to_string(sets.s3.size()) +
                              ", dim W_3 = " + std::to_string(w3) +
                              "; reduction braid identity " +
                              (braid_ok ? "holds" : "does not hold") + " on dimension " +
                              std::to_string(amb3);
  if (braid_ok && count_ok) return CheckReport::pass("pbw_cubic", summary);

  // Hunt for a concrete word with two distinct normal forms.
  for (std::size_t word = 0; word < amb3; ++word) {
    RationalVector e(amb3);
    e[word] = 1;
    RationalVector left = normal_form_degree3(sets.reduction, m, e, true);
    e = RationalVector(amb3);
    e[word] = 1;
    RationalVector right = normal_form_degree3(sets.reduction, m, e, false);
    if (left != right) {
      Witness w;
      const std::size_t a = word / (m * m);
      const std::size_t b = (word / m) % m;
      const std::size_t c = word % m;
      nlohmann::json lf = nlohmann::json::array();
      nlohmann::json rf = nlohmann::json::array();
      for (const auto& x : left) lf.push_back(rational_to_string(x));
      for (const auto& x : right) rf.push_back(rational_to_string(x));
      w.context = {{"check", "pbw_cubic"},
                   {"word", {a, b, c}},
                   {"left_first_normal_form", lf},
                   {"right_first_normal_form", rf}};
      w.input = RationalVector(amb3);
      w.input[word] = 1;
      w.difference.resize(amb3);
      for (std::size_t i = 0; i < amb3; ++i) w.difference[i] = left[i] - right[i];
      return CheckReport::fail("pbw_cubic", std::move(w), summary);
    }
  }
  // Count mismatch without a reduction discrepancy: report without witness.
  return CheckReport::fail_plain("pbw_cubic", summary);
}

BraidReport run_all(const statmodel::StatModel& model,
                    const statmodel::RelationSet& rs) {
  BraidReport report;
  report.global_yb = check_global_yb(rs);
  auto [sym, ext] = check_internal_braids(model);
  report.internal_sym = std::move(sym);
  report.internal_ext = std::move(ext);
  report.admissible = build_admissible(model, rs);
  report.pbw_cubic = pbw_cubic_check(model, rs);
  report.w3_dim = hilbert::graded_kernels(rs.p_gen, model.h_dim(), 3).back().dim();

  const bool internals = report.internal_sym.passed && report.internal_ext.passed;
  if (report.global_yb.passed == internals) {
    report.alarm_decoupling = CheckReport::pass(
        "consistency_yb_decoupling",
        "global identity agrees with the pair of internal identities");
  } else {
    report.alarm_decoupling = CheckReport::fail_plain(
        "consistency_yb_decoupling",
        std::string("decoupling violated: global check ") +
            (report.global_yb.passed ? "passes" : "fails") +
            " but internal checks " + (internals ? "pass" : "fail"));
  }
  if (report.global_yb.passed == report.pbw_cubic.passed) {
    report.alarm_yb_vs_pbw = CheckReport::pass(
        "consistency_yb_vs_pbw",
        "global identity agrees with the degree-3 rewriting check");
  } else {
    report.alarm_yb_vs_pbw = CheckReport::fail_plain(
        "consistency_yb_vs_pbw",
        std::string("equivalence violated: global check ") +
            (report.global_yb.passed ? "passes" : "fails") + " but cubic check " +
            (report.pbw_cubic.passed ? "passes" : "fails"));
  }
  return report;
}

}  // namespace transtat::braid
