#pragma once

#include <array>
#include <utility>
#include <vector>

#include "transtat/check.hpp"
#include "transtat/statmodel.hpp"

namespace transtat::braid {

/// Admissible-monomial data for a fixed total order on the generators.
/// s3 = {(a,b,c) : (a,b) and (b,c) in s2}; `reduction` is the degree-2
/// rewriting map: it fixes admissible monomials and sends every other
/// monomial to its unique combination of strictly smaller admissible ones.
struct AdmissibleSets {
  std::vector<std::pair<std::size_t, std::size_t>> s2;
  std::vector<std::array<std::size_t, 3>> s3;
  RationalMatrix reduction;
};

/// Braid identity for the relation data on H^3.  The operator tested is the
/// reflection id - 2·P_gen: for projectors onto symmetric/antisymmetric
/// sectors this reduces to the permutation braid identity, which is the form
/// under which ordered bases exist exactly for consistent models.  The
/// literal projector identity P12·P23·P12 = P23·P12·P23 is evaluated as well
/// and reported in the details (the two coincide only in special geometries).
CheckReport check_global_yb(const statmodel::RelationSet& rs);

/// The two decoupled internal identities on K^3, in literal projector form:
/// P12·P23·P12 = P23·P12·P23 for the symmetric and exterior internal
/// projectors separately.
std::pair<CheckReport, CheckReport> check_internal_braids(
    const statmodel::StatModel& model);

/// Computes s2 by eliminating the relation basis against the monomial order
/// and builds the reduction map.
AdmissibleSets build_admissible(const statmodel::StatModel& model,
                                const statmodel::RelationSet& rs);

/// Degree-3 consistency: |s3| must equal dim W_3, and the reduction maps must
/// satisfy the braid identity on H^3.  On failure the witness carries a word
/// with two distinct normal forms.
CheckReport pbw_cubic_check(const statmodel::StatModel& model,
                            const statmodel::RelationSet& rs);

/// Iterated rewriting of a degree-3 vector to its normal form, resolving the
/// left (positions 1,2) or the right (positions 2,3) pair first.
RationalVector normal_form_degree3(const RationalMatrix& reduction,
                                   std::size_t base_dim, RationalVector v,
                                   bool left_first);

/// All four checks plus the cross-consistency alarms asserted on every run:
/// the global identity must agree with the pair of internal ones, and with
/// the degree-3 rewriting check.
struct BraidReport {
  CheckReport global_yb;
  CheckReport internal_sym;
  CheckReport internal_ext;
  CheckReport pbw_cubic;
  CheckReport alarm_decoupling;
  CheckReport alarm_yb_vs_pbw;
  AdmissibleSets admissible;
  std::size_t w3_dim = 0;
};

BraidReport run_all(const statmodel::StatModel& model,
                    const statmodel::RelationSet& rs);

}  // namespace transtat::braid
