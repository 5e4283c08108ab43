#include "transtat/fock.hpp"

#include <algorithm>
#include <string>

#include "transtat/errors.hpp"
#include "transtat/exactla.hpp"
#include "transtat/guard.hpp"
#include "transtat/hilbert.hpp"

namespace transtat::fock {

namespace {

using kernels::multiply;

Witness matrix_witness(const RationalMatrix& residual, nlohmann::json context) {
  for (std::size_t c = 0; c < residual.cols(); ++c) {
    RationalVector col = residual.col_vector(c);
    if (std::any_of(col.begin(), col.end(),
                    [](const Rational& x) { return !x.is_zero(); })) {
      Witness w;
      context["basis_index"] = c;
      w.context = std::move(context);
      w.input = RationalVector(residual.cols());
      w.input[c] = 1;
      w.difference = std::move(col);
      return w;
    }
  }
  throw Error("matrix_witness called on a zero residual");
}

}  // namespace

std::size_t FockRealization::total_dim() const {
  std::size_t total = 0;
  for (const auto& level : levels) total += level.space.dim();
  return total;
}

std::vector<std::size_t> FockRealization::level_dims() const {
  std::vector<std::size_t> dims;
  dims.reserve(levels.size());
  for (const auto& level : levels) dims.push_back(level.space.dim());
  return dims;
}

FockRealization build_fock(const statmodel::StatModel& model,
                           const statmodel::RelationSet& rs, std::size_t n_max) {
  guard::checked_power(model.h_dim(), n_max, "build_fock");
  FockRealization fock;
  fock.model = model;
  fock.n_max = n_max;
  fock.h_gram = model.h_gram();
  const auto spaces = hilbert::graded_kernels(rs.p_gen, model.h_dim(), n_max);
  fock.levels.reserve(spaces.size());
  Rational factorial = 1;
  for (std::size_t n = 0; n < spaces.size(); ++n) {
    if (n > 0) factorial *= Rational(n);
    FockLevel level{spaces[n], RationalMatrix(), RationalMatrix()};
    const std::size_t dim = level.space.dim();
    const std::size_t ambient = level.space.ambient_dim();
    // The Fock inner product on the quotient is the n!-normalized
    // restriction of the product form: ⟨a†ⁿ0, a†ⁿ0⟩ = n! for a boson mode.
    // Without the normalization the Gram-adjoint annihilators lose a factor
    // n per level and the CCR/CAR and gl(d) identities fail.
    level.basis_gram = RationalMatrix(dim, ambient);
    for (std::size_t r = 0; r < dim; ++r) {
      const RationalVector bg =
          exactla::apply_tensor_gram(fock.h_gram, n, level.space.basis().row(r));
      for (std::size_t c = 0; c < ambient; ++c)
        level.basis_gram.at(r, c) = factorial * bg[c];
    }
    level.gram = multiply(level.basis_gram, level.space.basis().transpose());
    if (dim > 0 && !exactla::is_positive_definite(level.gram))
      throw ValidationError("build_fock: level " + std::to_string(n) +
                            " Gram is not positive definite");
    fock.levels.push_back(std::move(level));
  }
  return fock;
}

OperatorMatrix creation_matrix(const FockRealization& fock, std::size_t i,
                               std::size_t alpha, std::size_t n) {
  if (n >= fock.n_max)
    throw DimensionError("creation_matrix: level " + std::to_string(n) +
                         " out of range (truncation " + std::to_string(fock.n_max) +
                         ")");
  const std::size_t gen = fock.model.gen_index(i, alpha);
  const FockLevel& src = fock.levels[n];
  const FockLevel& dst = fock.levels[n + 1];
  const std::size_t src_dim = src.space.dim();
  const std::size_t dst_dim = dst.space.dim();
  const std::size_t src_ambient = src.space.ambient_dim();
  // X_{iα} ⊗ w places w in the gen-th block of H^(n+1); the Gram-orthogonal
  // projection coordinates solve Γ·c = B·𝒢·(X⊗w).
  RationalMatrix rhs(dst_dim, src_dim);
  for (std::size_t s = 0; s < dst_dim; ++s) {
    for (std::size_t r = 0; r < src_dim; ++r) {
      Rational acc = 0;
      for (std::size_t c = 0; c < src_ambient; ++c) {
        const Rational& bg = dst.basis_gram.at(s, gen * src_ambient + c);
        if (bg.is_zero()) continue;
        const Rational& x = src.space.basis().at(r, c);
        if (!x.is_zero()) acc += bg * x;
      }
      rhs.at(s, r) = std::move(acc);
    }
  }
  OperatorMatrix op;
  op.from_level = n;
  op.to_level = n + 1;
  op.matrix = dst_dim == 0 ? RationalMatrix(0, src_dim)
                           : exactla::solve(dst.gram, rhs);
  return op;
}

OperatorMatrix annihilation_matrix(const FockRealization& fock, std::size_t i,
                                   std::size_t alpha, std::size_t n) {
  if (n == 0 || n > fock.n_max)
    throw DimensionError("annihilation_matrix: level " + std::to_string(n) +
                         " out of range");
  const OperatorMatrix creation = creation_matrix(fock, i, alpha, n - 1);
  const FockLevel& below = fock.levels[n - 1];
  const FockLevel& here = fock.levels[n];
  OperatorMatrix op;
  op.from_level = n;
  op.to_level = n - 1;
  // Adjoint: Γ_{n-1}·A = Cᵀ·Γ_n.
  const RationalMatrix rhs = multiply(creation.matrix.transpose(), here.gram);
  op.matrix = below.space.dim() == 0
                  ? RationalMatrix(0, here.space.dim())
                  : exactla::solve(below.gram, rhs);
  return op;
}

OperatorTable::OperatorTable(const FockRealization& fock) : fock_(&fock) {
  const std::size_t m = fock.model.h_dim();
  creation_.resize(m);
  annihilation_.resize(m);
  for (std::size_t gen = 0; gen < m; ++gen) {
    const std::size_t i = gen / fock.model.k_dim;
    const std::size_t alpha = gen % fock.model.k_dim;
    creation_[gen].reserve(fock.n_max);
    annihilation_[gen].reserve(fock.n_max);
    for (std::size_t n = 0; n < fock.n_max; ++n)
      creation_[gen].push_back(creation_matrix(fock, i, alpha, n).matrix);
    for (std::size_t n = 1; n <= fock.n_max; ++n)
      annihilation_[gen].push_back(annihilation_matrix(fock, i, alpha, n).matrix);
  }
}

const RationalMatrix& OperatorTable::creation(std::size_t gen, std::size_t n) const {
  return creation_[gen][n];
}

const RationalMatrix& OperatorTable::annihilation(std::size_t gen,
                                                  std::size_t n) const {
  return annihilation_[gen][n - 1];
}

CheckReport vacuum_two_point(const OperatorTable& ops) {
  const auto& fock = ops.fock();
  const std::size_t m = fock.model.h_dim();
  if (fock.n_max < 1)
    throw ValidationError("vacuum_two_point: needs truncation degree >= 1");
  RationalMatrix observed(m, m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const RationalMatrix prod = multiply(ops.annihilation(x, 1), ops.creation(y, 0));
      observed.at(x, y) = prod.at(0, 0);
    }
  }
  const RationalMatrix residual = observed - fock.h_gram;
  if (residual.is_zero()) {
    return CheckReport::pass("vacuum_two_point",
                             "⟨0|X X†|0⟩ equals gδ on all " + std::to_string(m * m) +
                                 " generator pairs");
  }
  Witness w = matrix_witness(residual, {{"check", "vacuum_two_point"}});
  return CheckReport::fail("vacuum_two_point", std::move(w),
                           "two-point matrix differs from gδ");
}

namespace {

// X_{x} X†_{y} on level n (up then down); zero map when the raised level is
// out of range is prevented by the caller's window.
RationalMatrix mixed_xd(const OperatorTable& ops, std::size_t x, std::size_t y,
                        std::size_t n) {
  return multiply(ops.annihilation(x, n + 1), ops.creation(y, n));
}

// X†_{y} X_{x} on level n; the composite through level n-1, zero on n = 0.
RationalMatrix mixed_dx(const OperatorTable& ops, std::size_t y, std::size_t x,
                        std::size_t n) {
  const std::size_t dim = ops.fock().level_dim(n);
  if (n == 0) return RationalMatrix(dim, dim);
  return multiply(ops.creation(y, n - 1), ops.annihilation(x, n));
}

}  // namespace

CheckReport check_ab_bracket(const OperatorTable& ops, const ExchangeData& ex) {
  if (!ex.a || !ex.b)
    throw ValidationError("check_ab_bracket: A and B tensors are required");
  const auto& fock = ops.fock();
  const std::size_t d = fock.model.d;
  const std::size_t k = fock.model.k_dim;
  const std::size_t n_max = fock.n_max;
  if (ex.a->k != k || ex.b->k != k)
    throw ValidationError("check_ab_bracket: tensor dimension mismatch");

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t alpha = 0; alpha < k; ++alpha)
        for (std::size_t beta = 0; beta < k; ++beta) {
          // creator-creator, levels n -> n+2
          for (std::size_t n = 0; n + 2 <= n_max; ++n) {
            RationalMatrix acc(fock.level_dim(n + 2), fock.level_dim(n));
            for (std::size_t eta = 0; eta < k; ++eta)
              for (std::size_t lam = 0; lam < k; ++lam) {
                const Rational& ca = ex.a->at(eta, lam, alpha, beta);
                const Rational& cb = ex.b->at(eta, lam, alpha, beta);
                if (ca.is_zero() && cb.is_zero()) continue;
                const std::size_t xi = fock.model.gen_index(i, eta);
                const std::size_t xj = fock.model.gen_index(j, lam);
                const RationalMatrix ij =
                    multiply(ops.creation(xi, n + 1), ops.creation(xj, n));
                const RationalMatrix ji =
                    multiply(ops.creation(xj, n + 1), ops.creation(xi, n));
                acc += ca * (ij + ji) + cb * (ij - ji);
              }
            if (!acc.is_zero()) {
              Witness w = matrix_witness(acc, {{"check", "ab_bracket"},
                                               {"relation", "creator_creator"},
                                               {"i", i},
                                               {"j", j},
                                               {"alpha", alpha},
                                               {"beta", beta},
                                               {"level", n}});
              return CheckReport::fail("ab_bracket", std::move(w),
                                       "creator-creator bracket nonzero at level " +
                                           std::to_string(n));
            }
          }
          // annihilator-annihilator, levels n -> n-2
          for (std::size_t n = 2; n <= n_max; ++n) {
            RationalMatrix acc(fock.level_dim(n - 2), fock.level_dim(n));
            for (std::size_t eta = 0; eta < k; ++eta)
              for (std::size_t lam = 0; lam < k; ++lam) {
                const Rational& ca = ex.a->at(eta, lam, alpha, beta);
                const Rational& cb = ex.b->at(eta, lam, alpha, beta);
                if (ca.is_zero() && cb.is_zero()) continue;
                const std::size_t xi = fock.model.gen_index(i, eta);
                const std::size_t xj = fock.model.gen_index(j, lam);
                const RationalMatrix ij =
                    multiply(ops.annihilation(xi, n - 1), ops.annihilation(xj, n));
                const RationalMatrix ji =
                    multiply(ops.annihilation(xj, n - 1), ops.annihilation(xi, n));
                acc += ca * (ij + ji) + cb * (ij - ji);
              }
            if (!acc.is_zero()) {
              Witness w = matrix_witness(acc, {{"check", "ab_bracket"},
                                               {"relation", "annihilator_annihilator"},
                                               {"i", i},
                                               {"j", j},
                                               {"alpha", alpha},
                                               {"beta", beta},
                                               {"level", n}});
              return CheckReport::fail(
                  "ab_bracket", std::move(w),
                  "annihilator-annihilator bracket nonzero at level " +
                      std::to_string(n));
            }
          }
          // mixed, level-preserving on 0..n_max-1
          for (std::size_t n = 0; n + 1 <= n_max; ++n) {
            RationalMatrix acc(fock.level_dim(n), fock.level_dim(n));
            for (std::size_t eta = 0; eta < k; ++eta)
              for (std::size_t lam = 0; lam < k; ++lam) {
                const Rational& ca = ex.a->at(eta, lam, alpha, beta);
                const Rational& cb = ex.b->at(eta, lam, alpha, beta);
                if (ca.is_zero() && cb.is_zero()) continue;
                const std::size_t xi = fock.model.gen_index(i, eta);
                const std::size_t xj = fock.model.gen_index(j, lam);
                const RationalMatrix xd = mixed_xd(ops, xi, xj, n);
                const RationalMatrix dx = mixed_dx(ops, xj, xi, n);
                acc += ca * (xd + dx) + cb * (xd - dx);
              }
            RationalMatrix expected =
                RationalMatrix::identity(fock.level_dim(n));
            expected *= (i == j ? fock.model.g.at(alpha, beta) : Rational(0));
            const RationalMatrix residual = acc - expected;
            if (!residual.is_zero()) {
              Witness w = matrix_witness(residual, {{"check", "ab_bracket"},
                                                    {"relation", "mixed"},
                                                    {"i", i},
                                                    {"j", j},
                                                    {"alpha", alpha},
                                                    {"beta", beta},
                                                    {"level", n}});
              return CheckReport::fail("ab_bracket", std::move(w),
                                       "mixed bracket differs from gδ·id at level " +
                                           std::to_string(n));
            }
          }
        }
  return CheckReport::pass(
      "ab_bracket",
      "creator-creator, annihilator-annihilator and mixed relations hold on all "
      "level windows up to truncation " +
          std::to_string(n_max));
}

std::vector<GldGenerator> gld_generators(const OperatorTable& ops) {
  const auto& fock = ops.fock();
  const std::size_t d = fock.model.d;
  const std::size_t k = fock.model.k_dim;
  const RationalMatrix ginv = fock.model.g_inverse();
  std::vector<GldGenerator> js;
  js.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      GldGenerator gen{i, j, {}};
      gen.level_blocks.reserve(fock.n_max + 1);
      for (std::size_t n = 0; n <= fock.n_max; ++n) {
        RationalMatrix block(fock.level_dim(n), fock.level_dim(n));
        if (n >= 1) {
          for (std::size_t alpha = 0; alpha < k; ++alpha)
            for (std::size_t beta = 0; beta < k; ++beta) {
              const Rational& coeff = ginv.at(beta, alpha);
              if (coeff.is_zero()) continue;
              block += coeff * multiply(ops.creation(fock.model.gen_index(i, alpha),
                                                     n - 1),
                                        ops.annihilation(
                                            fock.model.gen_index(j, beta), n));
            }
        }
        gen.level_blocks.push_back(std::move(block));
      }
      js.push_back(std::move(gen));
    }
  return js;
}

CheckReport check_gld(const OperatorTable& ops,
                      const std::vector<GldGenerator>& js) {
  const auto& fock = ops.fock();
  const std::size_t d = fock.model.d;
  const std::size_t k = fock.model.k_dim;
  const auto j_at = [&](std::size_t i, std::size_t j) -> const GldGenerator& {
    return js[i * d + j];
  };
  // (i) [J_ij, X†_kσ] = δ_jk X†_iσ on levels 0..N-1.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t kk = 0; kk < d; ++kk)
        for (std::size_t sigma = 0; sigma < k; ++sigma)
          for (std::size_t n = 0; n + 1 <= fock.n_max; ++n) {
            const std::size_t gen_k = fock.model.gen_index(kk, sigma);
            const RationalMatrix lhs =
                multiply(j_at(i, j).level_blocks[n + 1], ops.creation(gen_k, n)) -
                multiply(ops.creation(gen_k, n), j_at(i, j).level_blocks[n]);
            RationalMatrix rhs(lhs.rows(), lhs.cols());
            if (j == kk) rhs = ops.creation(fock.model.gen_index(i, sigma), n);
            const RationalMatrix residual = lhs - rhs;
            if (!residual.is_zero()) {
              Witness w = matrix_witness(residual, {{"check", "gld"},
                                                    {"identity", "creator_action"},
                                                    {"i", i},
                                                    {"j", j},
                                                    {"k", kk},
                                                    {"sigma", sigma},
                                                    {"level", n}});
              return CheckReport::fail("gld", std::move(w),
                                       "[J, X†] identity fails at level " +
                                           std::to_string(n));
            }
          }
  // (ii) [J_ij, X_kσ] = -δ_ik X_jσ on levels 1..N.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t kk = 0; kk < d; ++kk)
        for (std::size_t sigma = 0; sigma < k; ++sigma)
          for (std::size_t n = 1; n <= fock.n_max; ++n) {
            const std::size_t gen_k = fock.model.gen_index(kk, sigma);
            const RationalMatrix lhs =
                multiply(j_at(i, j).level_blocks[n - 1], ops.annihilation(gen_k, n)) -
                multiply(ops.annihilation(gen_k, n), j_at(i, j).level_blocks[n]);
            RationalMatrix rhs(lhs.rows(), lhs.cols());
            if (i == kk) {
              rhs = ops.annihilation(fock.model.gen_index(j, sigma), n);
              rhs *= Rational(-1);
            }
            const RationalMatrix residual = lhs - rhs;
            if (!residual.is_zero()) {
              Witness w = matrix_witness(residual, {{"check", "gld"},
                                                    {"identity", "annihilator_action"},
                                                    {"i", i},
                                                    {"j", j},
                                                    {"k", kk},
                                                    {"sigma", sigma},
                                                    {"level", n}});
              return CheckReport::fail("gld", std::move(w),
                                       "[J, X] identity fails at level " +
                                           std::to_string(n));
            }
          }
  // (iii) [J_ij, J_kl] = δ_jk J_il - δ_il J_kj on all levels.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t kk = 0; kk < d; ++kk)
        for (std::size_t l = 0; l < d; ++l)
          for (std::size_t n = 0; n <= fock.n_max; ++n) {
            const RationalMatrix& a = j_at(i, j).level_blocks[n];
            const RationalMatrix& b = j_at(kk, l).level_blocks[n];
            RationalMatrix lhs = multiply(a, b) - multiply(b, a);
            RationalMatrix rhs(lhs.rows(), lhs.cols());
            if (j == kk) rhs += j_at(i, l).level_blocks[n];
            if (i == l) rhs -= j_at(kk, j).level_blocks[n];
            const RationalMatrix residual = lhs - rhs;
            if (!residual.is_zero()) {
              Witness w = matrix_witness(residual, {{"check", "gld"},
                                                    {"identity", "commutator"},
                                                    {"i", i},
                                                    {"j", j},
                                                    {"k", kk},
                                                    {"l", l},
                                                    {"level", n}});
              return CheckReport::fail("gld", std::move(w),
                                       "[J, J] identity fails at level " +
                                           std::to_string(n));
            }
          }
  return CheckReport::pass("gld",
                           "creator action, annihilator action and gl(d) "
                           "commutators hold on their level windows");
}

CheckReport check_number_operator(const OperatorTable& ops,
                                  const std::vector<GldGenerator>& js) {
  const auto& fock = ops.fock();
  const std::size_t d = fock.model.d;
  std::vector<RationalMatrix> number;
  number.reserve(fock.n_max + 1);
  for (std::size_t n = 0; n <= fock.n_max; ++n) {
    RationalMatrix block(fock.level_dim(n), fock.level_dim(n));
    for (std::size_t i = 0; i < d; ++i) block += js[i * d + i].level_blocks[n];
    number.push_back(std::move(block));
  }
  bool diagonal = true;
  for (std::size_t n = 0; n <= fock.n_max; ++n) {
    RationalMatrix expected = RationalMatrix::identity(fock.level_dim(n));
    expected *= Rational(n);
    if (number[n] != expected) diagonal = false;
  }
  for (const auto& gen : js) {
    for (std::size_t n = 0; n <= fock.n_max; ++n) {
      const RationalMatrix comm = multiply(number[n], gen.level_blocks[n]) -
                                  multiply(gen.level_blocks[n], number[n]);
      if (!comm.is_zero()) {
        Witness w = matrix_witness(comm, {{"check", "number_operator"},
                                          {"identity", "commutes_with_J"},
                                          {"i", gen.i},
                                          {"j", gen.j},
                                          {"level", n}});
        return CheckReport::fail("number_operator", std::move(w),
                                 "[N, J] nonzero at level " + std::to_string(n));
      }
    }
  }
  return CheckReport::pass(
      "number_operator",
      diagonal ? "N acts as n·id on every level, so creation raises the "
                 "eigenvalue by exactly one; [N, J] = 0 throughout"
               : "N is not scalar on every level (reported); [N, J] = 0 holds");
}

CheckReport check_quadratic_kill(const OperatorTable& ops,
                                 const statmodel::RelationSet& rs) {
  const auto& fock = ops.fock();
  const std::size_t m = fock.model.h_dim();
  const RationalMatrix& basis = rs.r_gen.basis();
  for (std::size_t rel = 0; rel < basis.rows(); ++rel) {
    for (std::size_t n = 0; n + 2 <= fock.n_max; ++n) {
      RationalMatrix acc(fock.level_dim(n + 2), fock.level_dim(n));
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
          const Rational& coeff = basis.at(rel, x * m + y);
          if (coeff.is_zero()) continue;
          acc += coeff * multiply(ops.creation(x, n + 1), ops.creation(y, n));
        }
      if (!acc.is_zero()) {
        Witness w = matrix_witness(acc, {{"check", "quadratic_kill"},
                                         {"relation_index", rel},
                                         {"level", n}});
        return CheckReport::fail("quadratic_kill", std::move(w),
                                 "relation composite nonzero at level " +
                                     std::to_string(n));
      }
    }
  }
  return CheckReport::pass("quadratic_kill",
                           "every relation vector annihilates as a creator "
                           "composite on all levels in range");
}

CheckReport check_exchange_consistency(const OperatorTable& ops,
                                       const ExchangeData& ex) {
  const auto& fock = ops.fock();
  const std::size_t d = fock.model.d;
  const std::size_t k = fock.model.k_dim;
  if (!ex.c && !ex.s && !ex.r)
    return CheckReport::pass("exchange_consistency",
                             "no exchange tensors supplied; nothing to check");
  std::string summary;

  if (ex.c) {
    // X_{iα} X†_{jβ} = Σ C^{γδ}_{αβ} X†_{jγ} X_{iδ} + g_{αβ} δ_{ij} 1.
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t alpha = 0; alpha < k; ++alpha)
          for (std::size_t beta = 0; beta < k; ++beta)
            for (std::size_t n = 0; n + 1 <= fock.n_max; ++n) {
              const RationalMatrix lhs =
                  mixed_xd(ops, fock.model.gen_index(i, alpha),
                           fock.model.gen_index(j, beta), n);
              RationalMatrix rhs(fock.level_dim(n), fock.level_dim(n));
              for (std::size_t gamma = 0; gamma < k; ++gamma)
                for (std::size_t delta = 0; delta < k; ++delta) {
                  const Rational& coeff = ex.c->at(gamma, delta, alpha, beta);
                  if (coeff.is_zero()) continue;
                  rhs += coeff * mixed_dx(ops, fock.model.gen_index(j, gamma),
                                          fock.model.gen_index(i, delta), n);
                }
              if (i == j) {
                RationalMatrix id = RationalMatrix::identity(fock.level_dim(n));
                id *= fock.model.g.at(alpha, beta);
                rhs += id;
              }
              const RationalMatrix residual = lhs - rhs;
              if (!residual.is_zero()) {
                Witness w = matrix_witness(residual,
                                           {{"check", "exchange_consistency"},
                                            {"identity", "c_mixed_relation"},
                                            {"i", i},
                                            {"j", j},
                                            {"alpha", alpha},
                                            {"beta", beta},
                                            {"level", n}});
                return CheckReport::fail(
                    "exchange_consistency", std::move(w),
                    "C-map mixed relation fails at level " + std::to_string(n));
              }
            }
    summary += "C reproduces the realized mixed relations; ";
  }
  if (ex.s) {
    // X†_{kσ} X†_{iα} = Σ S^{γδ}_{σα} X†_{iγ} X†_{kδ}.
    for (std::size_t kk = 0; kk < d; ++kk)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t sigma = 0; sigma < k; ++sigma)
          for (std::size_t alpha = 0; alpha < k; ++alpha)
            for (std::size_t n = 0; n + 2 <= fock.n_max; ++n) {
              const RationalMatrix lhs =
                  multiply(ops.creation(fock.model.gen_index(kk, sigma), n + 1),
                           ops.creation(fock.model.gen_index(i, alpha), n));
              RationalMatrix rhs(fock.level_dim(n + 2), fock.level_dim(n));
              for (std::size_t gamma = 0; gamma < k; ++gamma)
                for (std::size_t delta = 0; delta < k; ++delta) {
                  const Rational& coeff = ex.s->at(gamma, delta, sigma, alpha);
                  if (coeff.is_zero()) continue;
                  rhs += coeff *
                         multiply(ops.creation(fock.model.gen_index(i, gamma), n + 1),
                                  ops.creation(fock.model.gen_index(kk, delta), n));
                }
              const RationalMatrix residual = lhs - rhs;
              if (!residual.is_zero()) {
                Witness w = matrix_witness(residual,
                                           {{"check", "exchange_consistency"},
                                            {"identity", "s_creation_exchange"},
                                            {"k", kk},
                                            {"i", i},
                                            {"sigma", sigma},
                                            {"alpha", alpha},
                                            {"level", n}});
                return CheckReport::fail(
                    "exchange_consistency", std::move(w),
                    "S-map creation exchange fails at level " + std::to_string(n));
              }
            }
    summary += "S reproduces the creation exchange; ";
  }
  if (ex.r) {
    // X_{jβ} X_{kσ} = Σ R^{γδ}_{βσ} X_{kγ} X_{jδ}.
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t kk = 0; kk < d; ++kk)
        for (std::size_t beta = 0; beta < k; ++beta)
          for (std::size_t sigma = 0; sigma < k; ++sigma)
            for (std::size_t n = 2; n <= fock.n_max; ++n) {
              const RationalMatrix lhs =
                  multiply(ops.annihilation(fock.model.gen_index(j, beta), n - 1),
                           ops.annihilation(fock.model.gen_index(kk, sigma), n));
              RationalMatrix rhs(fock.level_dim(n - 2), fock.level_dim(n));
              for (std::size_t gamma = 0; gamma < k; ++gamma)
                for (std::size_t delta = 0; delta < k; ++delta) {
                  const Rational& coeff = ex.r->at(gamma, delta, beta, sigma);
                  if (coeff.is_zero()) continue;
                  rhs += coeff *
                         multiply(
                             ops.annihilation(fock.model.gen_index(kk, gamma), n - 1),
                             ops.annihilation(fock.model.gen_index(j, delta), n));
                }
              const RationalMatrix residual = lhs - rhs;
              if (!residual.is_zero()) {
                Witness w = matrix_witness(residual,
                                           {{"check", "exchange_consistency"},
                                            {"identity", "r_annihilation_exchange"},
                                            {"j", j},
                                            {"k", kk},
                                            {"beta", beta},
                                            {"sigma", sigma},
                                            {"level", n}});
                return CheckReport::fail(
                    "exchange_consistency", std::move(w),
                    "R-map annihilation exchange fails at level " + std::to_string(n));
              }
            }
    summary += "R reproduces the annihilation exchange; ";
  }
  if (ex.c && ex.s) {
    // Component identity linking C and S through g:
    // Σ_β g^{βα} C^{γδ}_{βσ} = Σ_η S^{γα}_{ση} g_{δη}.
    const RationalMatrix ginv = fock.model.g_inverse();
    for (std::size_t alpha = 0; alpha < k; ++alpha)
      for (std::size_t gamma = 0; gamma < k; ++gamma)
        for (std::size_t delta = 0; delta < k; ++delta)
          for (std::size_t sigma = 0; sigma < k; ++sigma) {
            Rational lhs = 0;
            for (std::size_t beta = 0; beta < k; ++beta)
              lhs += ginv.at(beta, alpha) * ex.c->at(gamma, delta, beta, sigma);
            Rational rhs = 0;
            for (std::size_t eta = 0; eta < k; ++eta)
              rhs += ex.s->at(gamma, alpha, sigma, eta) * fock.model.g.at(delta, eta);
            if (lhs != rhs) {
              Witness w;
              w.context = {{"check", "exchange_consistency"},
                           {"identity", "cs_component"},
                           {"alpha", alpha},
                           {"gamma", gamma},
                           {"delta", delta},
                           {"sigma", sigma}};
              w.difference = {lhs - rhs};
              return CheckReport::fail("exchange_consistency", std::move(w),
                                       "C/S component identity fails");
            }
          }
    summary += "C and S satisfy the g-adjointness component identity; ";
  }
  if (summary.size() >= 2) summary.resize(summary.size() - 2);
  return CheckReport::pass("exchange_consistency", summary);
}

}  // namespace transtat::fock
