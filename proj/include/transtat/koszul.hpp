#pragma once

#include "transtat/check.hpp"
#include "transtat/hilbert.hpp"
#include "transtat/statmodel.hpp"
#include "transtat/subspace.hpp"

namespace transtat::koszul {

/// Quadratic data of the dual algebra: the annihilator of the relation
/// subspace under the gram-induced pairing, identified with a subspace of
/// the same coordinate space, plus the orthogonal projector onto it.
struct DualData {
  Subspace r_perp;
  RationalMatrix dual_projector;
};

/// Annihilator of `relations` in V⊗V, where the pairing between dual and
/// primal square is gram_v ⊗ gram_v.
DualData dual_of(const Subspace& relations, const RationalMatrix& gram_v);

/// Dual of the full relation set (pairing from the one-particle form on H).
DualData dual_relations(const statmodel::RelationSet& rs,
                        const RationalMatrix& h_gram);

/// Dual of the single-mode relation subspace W_sym of a model.
DualData dual_relations_single_mode(const statmodel::StatModel& model);

/// Series of the dual algebra computed independently by the graded-kernel
/// method on the dual projector (never via the duality identity).
hilbert::SeriesCoeffs dual_series(const DualData& dd, std::size_t base_dim,
                                  std::size_t n_max);

/// Verifies G(t)·G!(-t) = 1 (mod t^(N+1)) by exact truncated multiplication.
CheckReport check_koszul_identity(const hilbert::SeriesCoeffs& series,
                                  const hilbert::SeriesCoeffs& dual,
                                  std::size_t n_max);

}  // namespace transtat::koszul
