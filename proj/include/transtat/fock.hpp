#pragma once

#include <optional>
#include <vector>

#include "transtat/check.hpp"
#include "transtat/statmodel.hpp"
#include "transtat/subspace.hpp"

namespace transtat::fock {

/// One graded level of the truncated Fock realization: the embedded
/// subspace W_n of H^(⊗n) with the Fock inner product, the n!-normalized
/// restriction of the product form (the normalization a second-quantized
/// pairing carries: ⟨a†ⁿ0, a†ⁿ0⟩ = n! for a boson mode).
struct FockLevel {
  Subspace space;
  RationalMatrix gram;        // n!·B·𝒢·Bᵀ, positive definite
  RationalMatrix basis_gram;  // n!·B·𝒢, reused by the projection solves
};

/// Truncated Fock space: levels 0..n_max realized as the graded kernels of
/// the relation projector, with level Grams inherited from δ⊗g.
struct FockRealization {
  statmodel::StatModel model;
  std::size_t n_max = 0;
  RationalMatrix h_gram;
  std::vector<FockLevel> levels;

  std::size_t level_dim(std::size_t n) const { return levels[n].space.dim(); }
  std::size_t total_dim() const;
  std::vector<std::size_t> level_dims() const;
};

struct OperatorMatrix {
  std::size_t from_level = 0;
  std::size_t to_level = 0;
  RationalMatrix matrix;  // dim(to_level) x dim(from_level)
};

/// Internal 4-index tensor T^{ηλ}_{αβ} with all indices in 0..k-1.
struct Tensor4 {
  std::size_t k = 0;
  RationalVector data;  // (((η·k+λ)·k+α)·k+β)

  const Rational& at(std::size_t eta, std::size_t lam, std::size_t alpha,
                     std::size_t beta) const {
    return data[((eta * k + lam) * k + alpha) * k + beta];
  }
  Rational& at(std::size_t eta, std::size_t lam, std::size_t alpha,
               std::size_t beta) {
    return data[((eta * k + lam) * k + alpha) * k + beta];
  }
  static Tensor4 zeros(std::size_t k) {
    return Tensor4{k, RationalVector(k * k * k * k)};
  }
};

/// Optional user-supplied exchange tensors; each is validated against the
/// model dimension when present.
struct ExchangeData {
  std::optional<Tensor4> a;  // anticommutator weights in the (A,B) bracket
  std::optional<Tensor4> b;  // commutator weights
  std::optional<Tensor4> c;  // mixed annihilation-creation exchange
  std::optional<Tensor4> s;  // pure-creation exchange
  std::optional<Tensor4> r;  // pure-annihilation exchange
};

FockRealization build_fock(const statmodel::StatModel& model,
                           const statmodel::RelationSet& rs, std::size_t n_max);

/// Matrix of v -> Π_{W_{n+1}}(X_{iα} ⊗ v) in the level bases.
OperatorMatrix creation_matrix(const FockRealization& fock, std::size_t i,
                               std::size_t alpha, std::size_t n);

/// Gram-adjoint of creation_matrix(i, α, n-1).
OperatorMatrix annihilation_matrix(const FockRealization& fock, std::size_t i,
                                   std::size_t alpha, std::size_t n);

/// Precomputed creation/annihilation matrices for every generator and level.
class OperatorTable {
 public:
  explicit OperatorTable(const FockRealization& fock);

  const FockRealization& fock() const { return *fock_; }
  /// Level n -> n+1 (0 <= n < n_max).
  const RationalMatrix& creation(std::size_t gen, std::size_t n) const;
  /// Level n -> n-1 (1 <= n <= n_max).
  const RationalMatrix& annihilation(std::size_t gen, std::size_t n) const;

 private:
  const FockRealization* fock_;
  std::vector<std::vector<RationalMatrix>> creation_;      // [gen][n]
  std::vector<std::vector<RationalMatrix>> annihilation_;  // [gen][n-1]
};

/// ⟨0| X_{iα} X†_{jβ} |0⟩ compared entrywise against g_{αβ} δ_{ij}.
CheckReport vacuum_two_point(const OperatorTable& ops);

/// The three (A,B)-bracket relations as exact matrix identities on every
/// level window: creator-creator = 0, annihilator-annihilator = 0, and
/// mixed = g δ · id.  Requires the A and B tensors.
CheckReport check_ab_bracket(const OperatorTable& ops, const ExchangeData& ex);

/// J_{ij} = Σ g^{βα} X†_{iα} X_{jβ}, level-preserving blocks on 0..n_max.
struct GldGenerator {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<RationalMatrix> level_blocks;
};
std::vector<GldGenerator> gld_generators(const OperatorTable& ops);

/// Lemma-style identities: (i) [J_ij, X†_kσ] = δ_jk X†_iσ on levels 0..N-1,
/// (ii) [J_ij, X_kσ] = -δ_ik X_jσ on levels 1..N, (iii) gl(d) commutators on
/// all levels.
CheckReport check_gld(const OperatorTable& ops,
                      const std::vector<GldGenerator>& js);

/// N = Σ_i J_ii must commute with every J_ij; when it acts as n·id on every
/// level (it does whenever the realization is equivariant), creation raises
/// the eigenvalue by exactly one.
CheckReport check_number_operator(const OperatorTable& ops,
                                  const std::vector<GldGenerator>& js);

/// Every relation vector annihilates as a creator composite: for r in R_gen,
/// Σ r_{xy}·X†_x X†_y = 0 from every level in range.
CheckReport check_quadratic_kill(const OperatorTable& ops,
                                 const statmodel::RelationSet& rs);

/// Consistency of user-supplied exchange tensors with the realized
/// operators: the C-map mixed relation, the S/R pure exchange relations, and
/// the component identity linking C and S through g when both are present.
CheckReport check_exchange_consistency(const OperatorTable& ops,
                                       const ExchangeData& ex);

}  // namespace transtat::fock
