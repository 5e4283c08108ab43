#include "transtat/statmodel.hpp"

#include <algorithm>
#include <numeric>

#include "transtat/errors.hpp"
#include "transtat/guard.hpp"

namespace transtat::statmodel {

using exactla::kron;

RationalMatrix StatModel::h_gram() const {
  return kron(RationalMatrix::identity(d), g);
}

RationalMatrix StatModel::g_inverse() const { return exactla::inverse(g); }

void StatModel::validate() const {
  if (d < 1) throw ValidationError("model: d must be >= 1");
  if (k_dim < 1) throw ValidationError("model: k_dim must be >= 1");
  if (n_max < 2) throw ValidationError("model: n_max must be >= 2");
  if (!g.is_square() || g.rows() != k_dim)
    throw ValidationError("model: g must be k_dim x k_dim");
  for (std::size_t r = 0; r < k_dim; ++r)
    for (std::size_t c = r + 1; c < k_dim; ++c)
      if (g.at(r, c) != g.at(c, r))
        throw ValidationError("model: g is not symmetric at entry pair (" +
                              std::to_string(r) + "," + std::to_string(c) +
                              ")/(" + std::to_string(c) + "," +
                              std::to_string(r) + ")");
  if (!exactla::is_positive_definite(g))
    throw ValidationError("model: g is not positive definite (a leading principal minor is <= 0)");
  const std::size_t amb = k_dim * k_dim;
  if (w_sym.ambient_dim() != amb)
    throw ValidationError("model: w_sym ambient dimension must be k_dim^2");
  if (w_ext.ambient_dim() != amb)
    throw ValidationError("model: w_ext ambient dimension must be k_dim^2");
  if (order.size() != h_dim())
    throw ValidationError("model: order must list all d*k_dim generators");
  std::vector<bool> seen(h_dim(), false);
  for (const auto idx : order) {
    if (idx >= h_dim() || seen[idx])
      throw ValidationError("model: order is not a permutation of the generators");
    seen[idx] = true;
  }
}

std::pair<RationalMatrix, RationalMatrix> external_projectors(std::size_t d) {
  if (d < 1) throw ValidationError("external_projectors: d must be >= 1");
  const RationalMatrix id = RationalMatrix::identity(d * d);
  const RationalMatrix swap = exactla::swap_matrix(d);
  const Rational half(1, 2);
  RationalMatrix p_sym = half * (id + swap);
  RationalMatrix p_ext = half * (id - swap);
  return {std::move(p_sym), std::move(p_ext)};
}

RationalMatrix block_reshuffle(std::size_t d, std::size_t k_dim) {
  const std::size_t m = d * k_dim;
  RationalMatrix pi(m * m, m * m);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t a = 0; a < k_dim; ++a)
        for (std::size_t b = 0; b < k_dim; ++b) {
          const std::size_t block = (i * d + j) * k_dim * k_dim + (a * k_dim + b);
          const std::size_t flat = (i * k_dim + a) * m + (j * k_dim + b);
          pi.at(block, flat) = 1;
        }
  return pi;
}

RelationSet assemble_pgen(const StatModel& model) {
  model.validate();
  const std::size_t d = model.d;
  const std::size_t k = model.k_dim;
  const std::size_t m = model.h_dim();
  guard::check(m * m, "assemble_pgen ambient");

  const auto [p_sym_e, p_ext_e] = external_projectors(d);
  const RationalMatrix gram_kk = kron(model.g, model.g);
  const RationalMatrix p_sym_k = exactla::orthogonal_projector(model.w_sym, gram_kk);
  const RationalMatrix p_ext_k = exactla::orthogonal_projector(model.w_ext, gram_kk);

  const RationalMatrix block =
      kron(p_sym_e, p_sym_k) + kron(p_ext_e, p_ext_k);
  const RationalMatrix pi = block_reshuffle(d, k);
  const RationalMatrix p_gen =
      kernels::multiply(kernels::multiply(pi.transpose(), block), pi);

  const RationalMatrix h_gram = model.h_gram();
  const RationalMatrix gram2 = kron(h_gram, h_gram);
  if (!exactla::is_projector(p_gen, gram2))
    throw ValidationError("assemble_pgen: assembled operator failed the projector check");

  const std::size_t expected_rank = d * (d + 1) / 2 * model.w_sym.dim() +
                                    d * (d - 1) / 2 * model.w_ext.dim();
  const Subspace r_gen = exactla::image(p_gen);
  if (r_gen.dim() != expected_rank)
    throw ValidationError("assemble_pgen: rank " + std::to_string(r_gen.dim()) +
                          " does not match bookkeeping " +
                          std::to_string(expected_rank));

  RelationSet rs;
  rs.d = d;
  rs.k_dim = k;
  rs.ambient = m * m;
  rs.p_gen = p_gen;
  rs.p_gen_perp = RationalMatrix::identity(m * m) - p_gen;
  rs.r_gen = r_gen;
  rs.gram2 = gram2;
  rs.p_sym_internal = p_sym_k;
  rs.p_ext_internal = p_ext_k;
  return rs;
}

std::vector<RationalVector> relation_vectors(const RelationSet& rs,
                                             const StatModel& model) {
  // (e_i⊗e_j)⊗(k_α⊗k_β) is the basis vector X_{iα}⊗X_{jβ}, so the family is
  // exactly the columns of p_gen in (i,j,α,β) order.
  std::vector<RationalVector> out;
  out.reserve(rs.ambient);
  const std::size_t k = model.k_dim;
  const std::size_t m = model.h_dim();
  for (std::size_t i = 0; i < model.d; ++i)
    for (std::size_t j = 0; j < model.d; ++j)
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
          const std::size_t col = (i * k + a) * m + (j * k + b);
          out.push_back(rs.p_gen.col_vector(col));
        }
  return out;
}

namespace {

std::vector<std::size_t> lex_order(std::size_t m) {
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

RationalVector h_vector(std::size_t k) {
  RationalVector h(k * k);
  for (std::size_t a = 0; a < k; ++a) h[a * k + a] = 1;
  return h;
}

}  // namespace

StatModel preset(const std::string& name, std::size_t d) {
  StatModel model;
  if (name == "boson" || name == "fermion") {
    model.d = d == 0 ? 2 : d;
    model.k_dim = 1;
    model.g = RationalMatrix::identity(1);
    const Subspace zero(1);
    const Subspace full = Subspace::full(1);
    model.w_sym = name == "boson" ? zero : full;
    model.w_ext = name == "boson" ? full : zero;
    model.n_max = 6;
  } else if (name == "example_sec5" || name == "example_sec5_completed") {
    model.d = d == 0 ? 2 : d;
    model.k_dim = 3;
    model.g = RationalMatrix::identity(3);
    const RationalVector h = h_vector(3);
    // W_sym = h^⊥: kernel of the single row ⟨h,·⟩ (g is the identity here).
    model.w_sym = exactla::kernel(RationalMatrix::from_rows(9, {h}));
    model.w_ext = name == "example_sec5_completed"
                      ? Subspace::from_spanning(9, {h})
                      : Subspace(9);
    model.n_max = 4;
  } else {
    throw ValidationError("unknown preset '" + name + "'");
  }
  model.order = lex_order(model.h_dim());
  model.validate();
  return model;
}

bool equivariant_under(const RelationSet& rs, const RationalMatrix& u) {
  if (!u.is_square() || u.rows() != rs.d)
    throw DimensionError("equivariant_under: u must be d x d");
  const RationalMatrix u_h = kron(u, RationalMatrix::identity(rs.k_dim));
  const RationalMatrix u2 = kron(u_h, u_h);
  if (kernels::multiply(u2, u2.transpose()) != RationalMatrix::identity(rs.ambient))
    throw ValidationError("equivariant_under: u is not orthogonal");
  const RationalMatrix lhs = kernels::multiply(kernels::multiply(u2, rs.p_gen),
                                               u2.transpose());
  return lhs == rs.p_gen;
}

}  // namespace transtat::statmodel
