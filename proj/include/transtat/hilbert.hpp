#pragma once

#include <optional>
#include <vector>

#include "transtat/check.hpp"
#include "transtat/statmodel.hpp"
#include "transtat/subspace.hpp"

namespace transtat::hilbert {

/// Truncated Hilbert-Poincaré series: exact graded dimensions g_0..g_N.
/// `terminated_at` = m guarantees every coefficient from degree m on is zero
/// (a zero level kills all higher levels, since W_n embeds in W_m ⊗ K^(n-m)).
struct SeriesCoeffs {
  std::vector<Integer> coeffs;
  std::optional<std::size_t> terminated_at;
};

struct GradedKernel {
  std::size_t degree = 0;
  Subspace space;
};

/// Degree-n admissible subspace W_n = ∩_k ker(id^(k-1)⊗P⊗id^(n-k-1)),
/// computed directly from the n-1 shifted kernels.
GradedKernel graded_kernel(const RationalMatrix& relation_projector,
                           std::size_t base_dim, std::size_t n);

/// Levels 0..N computed incrementally: W_{n+1} = (W_n ⊗ V) ∩ ker of the last
/// shifted projector; the first n-1 conditions are inherited from W_n.
std::vector<Subspace> graded_kernels(const RationalMatrix& relation_projector,
                                     std::size_t base_dim, std::size_t n_max);

/// The d=1 specialization of P_gen: only the symmetric external sector
/// survives, so the single-mode relation projector is the g⊗g-orthogonal
/// projector onto W_sym.
RationalMatrix single_mode_projector(const statmodel::StatModel& model);

SeriesCoeffs single_mode_series(const statmodel::StatModel& model, std::size_t n_max);

SeriesCoeffs full_series(const statmodel::StatModel& model,
                         const statmodel::RelationSet& rs, std::size_t n_max);

/// Term-by-term comparison of the full series against the d-th power of the
/// single-mode series; the witness records the first mismatching degree.
CheckReport check_factorization(const statmodel::StatModel& model,
                                const statmodel::RelationSet& rs, std::size_t n_max);
CheckReport compare_factorization(const SeriesCoeffs& single, const SeriesCoeffs& full,
                                  std::size_t d, std::size_t n_max);

/// Independent oracle: dim Σ_k V^(k-1)⊗R⊗V^(n-k-1), computed by subspace
/// sums, so dim W_n = base_dim^n − ideal_dimension(...).
std::size_t ideal_dimension(const Subspace& relations, std::size_t base_dim,
                            std::size_t n);

/// Coefficients of series^d, truncated at degree n_max.
std::vector<Integer> power_series(const std::vector<Integer>& coeffs, std::size_t d,
                                  std::size_t n_max);

}  // namespace transtat::hilbert
