#include "transtat/koszul.hpp"

#include <string>

#include "transtat/errors.hpp"
#include "transtat/exactla.hpp"

namespace transtat::koszul {

DualData dual_of(const Subspace& relations, const RationalMatrix& gram_v) {
  const RationalMatrix pairing = exactla::kron(gram_v, gram_v);
  DualData dd{exactla::annihilator(relations, pairing), RationalMatrix()};
  dd.dual_projector = exactla::orthogonal_projector(dd.r_perp, pairing);
  return dd;
}

DualData dual_relations(const statmodel::RelationSet& rs,
                        const RationalMatrix& h_gram) {
  return dual_of(rs.r_gen, h_gram);
}

DualData dual_relations_single_mode(const statmodel::StatModel& model) {
  return dual_of(model.w_sym, model.g);
}

hilbert::SeriesCoeffs dual_series(const DualData& dd, std::size_t base_dim,
                                  std::size_t n_max) {
  const auto levels = hilbert::graded_kernels(dd.dual_projector, base_dim, n_max);
  hilbert::SeriesCoeffs series;
  for (const auto& level : levels) series.coeffs.emplace_back(level.dim());
  for (std::size_t n = 0; n < series.coeffs.size(); ++n) {
    if (series.coeffs[n] == 0) {
      series.terminated_at = n;
      break;
    }
  }
  return series;
}

CheckReport check_koszul_identity(const hilbert::SeriesCoeffs& series,
                                  const hilbert::SeriesCoeffs& dual,
                                  std::size_t n_max) {
  if (series.coeffs.size() <= n_max || dual.coeffs.size() <= n_max)
    throw ValidationError("check_koszul_identity: both series must reach degree N");
  // Coefficient t^n of G(t)·G!(-t), which must be 1 at n = 0 and 0 above.
  for (std::size_t n = 0; n <= n_max; ++n) {
    Integer acc = 0;
    for (std::size_t j = 0; j <= n; ++j) {
      Integer term = series.coeffs[n - j] * dual.coeffs[j];
      if (j % 2 == 1) term = -term;
      acc += term;
    }
    const Integer expected = n == 0 ? 1 : 0;
    if (acc != expected) {
      Witness w;
      w.context = {{"check", "koszul_identity"},
                   {"degree", n},
                   {"coefficient", acc.str()},
                   {"expected", expected.str()}};
      w.difference = {Rational(acc - expected)};
      return CheckReport::fail("koszul_identity", std::move(w),
                               "G(t)·G!(-t) has coefficient " + acc.str() +
                                   " at degree " + std::to_string(n) +
                                   ", expected " + expected.str());
    }
  }
  return CheckReport::pass("koszul_identity",
                           "G(t)·G!(-t) = 1 holds through degree " +
                               std::to_string(n_max));
}

}  // namespace transtat::koszul
