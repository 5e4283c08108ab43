#pragma once

#include <utility>
#include <vector>

#include "transtat/matrix.hpp"
#include "transtat/subspace.hpp"

namespace transtat::exactla {

struct RrefResult {
  RationalMatrix matrix;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Canonical basis of the null space {v : m·v = 0}.
Subspace kernel(const RationalMatrix& m);

/// Column space of m.
Subspace image(const RationalMatrix& m);

Subspace sum(const Subspace& a, const Subspace& b);

/// Exact intersection, computed by stacking annihilators:
/// a ∩ b = (a° + b°)° under the standard pairing.
Subspace intersect(const Subspace& a, const Subspace& b);

/// {φ : φᵀ·pairing·v = 0 for all v in s}.  The pairing must be square and
/// nondegenerate.
Subspace annihilator(const Subspace& s, const RationalMatrix& pairing);

/// Kronecker product with the index convention (i,α) -> i·cols(b)+α.
RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

/// SWAP on V⊗V for dim V = n: e_i⊗e_j -> e_j⊗e_i.
RationalMatrix swap_matrix(std::size_t n);

/// True iff p·p = p and gram·p = pᵀ·gram (self-adjoint for the given inner
/// product).  The gram matrix must be symmetric positive definite.
bool is_projector(const RationalMatrix& p, const RationalMatrix& gram);

bool is_symmetric(const RationalMatrix& m);
/// Leading-principal-minor test via elimination; input must be symmetric.
bool is_positive_definite(const RationalMatrix& m);

/// Solves a·x = rhs for invertible a.
RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& rhs);
RationalMatrix inverse(const RationalMatrix& a);

/// g-orthogonal projector of the ambient space onto `w`:
/// idempotent, image w, self-adjoint with respect to gram.
RationalMatrix orthogonal_projector(const Subspace& w, const RationalMatrix& gram);

/// Applies id^(k-1) ⊗ op ⊗ id^(n-k-1) to a vector in base^n coordinates,
/// where op acts on two adjacent factors (positions k, k+1; 1-based k ≤ n-1).
/// Avoids materializing the shifted operator.
RationalVector apply_at_position(const RationalMatrix& op, std::size_t base,
                                 std::size_t n, std::size_t k,
                                 std::span<const Rational> v);

/// The shifted operator id^(k-1) ⊗ op ⊗ id^(n-k-1) as an explicit matrix.
RationalMatrix shifted_operator(const RationalMatrix& op, std::size_t base,
                                std::size_t n, std::size_t k);

/// Applies gram_factor^{⊗n} to v (factor-wise, without forming the product).
RationalVector apply_tensor_gram(const RationalMatrix& gram_factor, std::size_t n,
                                 std::span<const Rational> v);

}  // namespace transtat::exactla
