#include "transtat/hilbert.hpp"

#include <string>

#include "transtat/errors.hpp"
#include "transtat/exactla.hpp"
#include "transtat/guard.hpp"

namespace transtat::hilbert {

GradedKernel graded_kernel(const RationalMatrix& relation_projector,
                           std::size_t base_dim, std::size_t n) {
  if (relation_projector.rows() != base_dim * base_dim ||
      !relation_projector.is_square())
    throw DimensionError("graded_kernel: projector must act on base_dim^2");
  const std::size_t ambient = guard::checked_power(base_dim, n, "graded_kernel");
  if (n == 0) return {0, Subspace::full(1)};
  if (n == 1) return {1, Subspace::full(base_dim)};
  Subspace space = Subspace::full(ambient);
  for (std::size_t k = 1; k <= n - 1; ++k) {
    const RationalMatrix shifted =
        exactla::shifted_operator(relation_projector, base_dim, n, k);
    space = exactla::intersect(space, exactla::kernel(shifted));
  }
  return {n, std::move(space)};
}

std::vector<Subspace> graded_kernels(const RationalMatrix& relation_projector,
                                     std::size_t base_dim, std::size_t n_max) {
  if (relation_projector.rows() != base_dim * base_dim ||
      !relation_projector.is_square())
    throw DimensionError("graded_kernels: projector must act on base_dim^2");
  std::vector<Subspace> levels;
  levels.reserve(n_max + 1);
  levels.push_back(Subspace::full(1));
  if (n_max == 0) return levels;
  levels.push_back(Subspace::full(base_dim));
  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::size_t ambient = guard::checked_power(base_dim, n, "graded_kernels");
    const Subspace& prev = levels.back();
    if (prev.dim() == 0) {
      levels.push_back(Subspace(ambient));
      continue;
    }
    // Candidate rows span W_{n-1} ⊗ V; the inherited conditions hold there.
    const RationalMatrix candidates =
        exactla::kron(prev.basis(), RationalMatrix::identity(base_dim));
    // Constraint: the last shifted projector annihilates the combination.
    RationalMatrix constraint(candidates.rows(), ambient);
    for (std::size_t r = 0; r < candidates.rows(); ++r) {
      const RationalVector img = exactla::apply_at_position(
          relation_projector, base_dim, n, n - 1, candidates.row(r));
      for (std::size_t c = 0; c < ambient; ++c) constraint.at(r, c) = img[c];
    }
    const Subspace coeffs = exactla::kernel(constraint.transpose());
    const RationalMatrix rows = kernels::multiply(coeffs.basis(), candidates);
    levels.push_back(Subspace::from_spanning(rows));
  }
  return levels;
}

RationalMatrix single_mode_projector(const statmodel::StatModel& model) {
  const RationalMatrix gram_kk = exactla::kron(model.g, model.g);
  return exactla::orthogonal_projector(model.w_sym, gram_kk);
}

namespace {

SeriesCoeffs series_from_levels(const std::vector<Subspace>& levels) {
  SeriesCoeffs series;
  series.coeffs.reserve(levels.size());
  for (const auto& level : levels) series.coeffs.emplace_back(level.dim());
  for (std::size_t n = 0; n < series.coeffs.size(); ++n) {
    if (series.coeffs[n] == 0) {
      series.terminated_at = n;
      break;
    }
  }
  return series;
}

}  // namespace

SeriesCoeffs single_mode_series(const statmodel::StatModel& model, std::size_t n_max) {
  return series_from_levels(
      graded_kernels(single_mode_projector(model), model.k_dim, n_max));
}

SeriesCoeffs full_series(const statmodel::StatModel& model,
                         const statmodel::RelationSet& rs, std::size_t n_max) {
  return series_from_levels(graded_kernels(rs.p_gen, model.h_dim(), n_max));
}

std::vector<Integer> power_series(const std::vector<Integer>& coeffs, std::size_t d,
                                  std::size_t n_max) {
  std::vector<Integer> result(n_max + 1, Integer(0));
  result[0] = 1;
  for (std::size_t rep = 0; rep < d; ++rep) {
    std::vector<Integer> next(n_max + 1, Integer(0));
    for (std::size_t i = 0; i <= n_max; ++i) {
      if (result[i] == 0) continue;
      for (std::size_t j = 0; j + i <= n_max && j < coeffs.size(); ++j) {
        next[i + j] += result[i] * coeffs[j];
      }
    }
    result = std::move(next);
  }
  return result;
}

CheckReport compare_factorization(const SeriesCoeffs& single, const SeriesCoeffs& full,
                                  std::size_t d, std::size_t n_max) {
  const std::vector<Integer> expected = power_series(single.coeffs, d, n_max);
  for (std::size_t n = 0; n <= n_max && n < full.coeffs.size(); ++n) {
    if (full.coeffs[n] != expected[n]) {
      Witness w;
      w.context = {{"degree", n},
                   {"full_coefficient", full.coeffs[n].str()},
                   {"single_mode_power_coefficient", expected[n].str()}};
      w.input = {};
      w.difference = {Rational(full.coeffs[n] - expected[n])};
      return CheckReport::fail(
          "factorization", std::move(w),
          "first mismatch at degree " + std::to_string(n) + ": full series gives " +
              full.coeffs[n].str() + ", single-mode power gives " +
              expected[n].str());
    }
  }
  return CheckReport::pass("factorization",
                           "full series equals the d-th power of the single-mode "
                           "series through degree " +
                               std::to_string(n_max));
}

CheckReport check_factorization(const statmodel::StatModel& model,
                                const statmodel::RelationSet& rs, std::size_t n_max) {
  const SeriesCoeffs single = single_mode_series(model, n_max);
  const SeriesCoeffs full = full_series(model, rs, n_max);
  return compare_factorization(single, full, model.d, n_max);
}

std::size_t ideal_dimension(const Subspace& relations, std::size_t base_dim,
                            std::size_t n) {
  if (relations.ambient_dim() != base_dim * base_dim)
    throw DimensionError("ideal_dimension: relations must live in base_dim^2");
  guard::checked_power(base_dim, n, "ideal_dimension");
  if (n < 2 || relations.dim() == 0) return 0;
  std::vector<RationalMatrix> blocks;
  std::size_t total_rows = 0;
  for (std::size_t k = 1; k <= n - 1; ++k) {
    const RationalMatrix left = RationalMatrix::identity(
        guard::checked_power(base_dim, k - 1, "ideal_dimension"));
    const RationalMatrix right = RationalMatrix::identity(
        guard::checked_power(base_dim, n - k - 1, "ideal_dimension"));
    blocks.push_back(
        exactla::kron(exactla::kron(left, relations.basis()), right));
    total_rows += blocks.back().rows();
  }
  RationalMatrix stacked(total_rows, blocks.front().cols());
  std::size_t offset = 0;
  for (const auto& block : blocks) {
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c)
        stacked.at(offset + r, c) = block.at(r, c);
    offset += block.rows();
  }
  return exactla::rank(stacked);
}

}  // namespace transtat::hilbert
