#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "transtat/exactla.hpp"
#include "transtat/matrix.hpp"
#include "transtat/subspace.hpp"

namespace transtat::statmodel {

/// Declaration of a statistics species: external mode count, internal space
/// with its symmetric positive-definite form, and the two internal relation
/// subspaces coupled to the symmetric/antisymmetric external sectors.
struct StatModel {
  std::size_t d = 1;       // external mode count
  std::size_t k_dim = 1;   // internal dimension
  RationalMatrix g;        // k_dim x k_dim, symmetric positive definite
  Subspace w_sym;          // subspace of K⊗K (ambient k_dim^2)
  Subspace w_ext;          // subspace of K⊗K
  std::vector<std::size_t> order;  // rank -> generator flat index i*k_dim+α
  std::size_t n_max = 6;   // truncation degree for graded computations

  StatModel() : w_sym(1), w_ext(1) {}

  std::size_t h_dim() const { return d * k_dim; }
  /// Flat index of the generator X_{iα}.
  std::size_t gen_index(std::size_t i, std::size_t alpha) const {
    return i * k_dim + alpha;
  }

  RationalMatrix h_gram() const;     // δ_d ⊗ g on H
  RationalMatrix g_inverse() const;  // g^{βα}

  /// Throws ValidationError describing the first violated requirement.
  void validate() const;
};

/// Assembled quadratic relation data of a model.
struct RelationSet {
  std::size_t d = 0;
  std::size_t k_dim = 0;
  std::size_t ambient = 0;      // (d·k_dim)^2
  RationalMatrix p_gen;         // projector onto R_gen, in X_{iα}⊗X_{jβ} coords
  RationalMatrix p_gen_perp;    // identity - p_gen
  Subspace r_gen;               // image of p_gen
  RationalMatrix gram2;         // product Gram on H⊗H
  RationalMatrix p_sym_internal;  // g⊗g-orthogonal projector onto w_sym
  RationalMatrix p_ext_internal;  // g⊗g-orthogonal projector onto w_ext
};

/// Projectors onto Sym²(E) and ∧²(E) on the d²-dimensional space E⊗E.
std::pair<RationalMatrix, RationalMatrix> external_projectors(std::size_t d);

/// Permutation matrix taking H⊗H coordinates (X_{iα}⊗X_{jβ}) to block
/// coordinates ((e_i⊗e_j)⊗(k_α⊗k_β)).
RationalMatrix block_reshuffle(std::size_t d, std::size_t k_dim);

/// Builds P_gen = P_sym⊗P_sym^K + P_ext⊗P_ext^K in generator coordinates,
/// verifying idempotence, self-adjointness and the rank bookkeeping.
RelationSet assemble_pgen(const StatModel& model);

/// The spanning family r^{αβ}_{ij} = P_gen((e_i⊗e_j)⊗(k_α⊗k_β)), returned in
/// (i,j,α,β) lexicographic order as vectors in X_{iγ}⊗X_{jδ} coordinates.
std::vector<RationalVector> relation_vectors(const RelationSet& rs,
                                             const StatModel& model);

/// Built-in models: "boson", "fermion" (any d, one-dimensional K), and
/// "example_sec5" (K = C³, W_sym = h^⊥ for h = Σ k_α⊗k_α, W_ext = 0).
/// "example_sec5_completed" adds the one-dimensional W_ext = span{h}, the
/// natural candidate completing the mixed sector to the full 9 dimensions.
StatModel preset(const std::string& name, std::size_t d = 0);

/// Exact equivariance probe: u must be orthogonal (e.g. a signed
/// permutation); checks (u⊗u⊗1⊗1)·P_gen·(u⊗u⊗1⊗1)⁻¹ = P_gen.
bool equivariant_under(const RelationSet& rs, const RationalMatrix& u);

}  // namespace transtat::statmodel
