#include <doctest.h>

#include <random>

#include "transtat/fock.hpp"
#include "transtat/hilbert.hpp"
#include "transtat/koszul.hpp"
#include "transtat/statmodel.hpp"

// Randomized cross-module invariants.  Every generator is seeded, so the
// draws (and therefore the whole suite) are deterministic.

using namespace transtat;

namespace {

RationalMatrix random_entries(std::size_t rows, std::size_t cols,
                              std::mt19937_64& rng) {
  std::uniform_int_distribution<int> numer(-3, 3);
  std::uniform_int_distribution<int> denom(1, 3);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rational(numer(rng), denom(rng));
  return m;
}

// Random symmetric positive definite form: L·Lᵀ + I for random lower L.
RationalMatrix random_spd(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  RationalMatrix l(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < r; ++c) l.at(r, c) = entry(rng);
    l.at(r, r) = 1;
  }
  RationalMatrix g = l * l.transpose();
  for (std::size_t i = 0; i < n; ++i) g.at(i, i) += 1;
  return g;
}

statmodel::StatModel random_model(std::size_t d, std::size_t k,
                                  std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> sym_rows(0, k * k);
  std::uniform_int_distribution<std::size_t> ext_rows(0, k * k);
  statmodel::StatModel model;
  model.d = d;
  model.k_dim = k;
  model.g = random_spd(k, rng);
  model.w_sym = Subspace::from_spanning(random_entries(sym_rows(rng), k * k, rng));
  model.w_ext = Subspace::from_spanning(random_entries(ext_rows(rng), k * k, rng));
  model.order.resize(d * k);
  for (std::size_t i = 0; i < model.order.size(); ++i) model.order[i] = i;
  model.n_max = 3;
  model.validate();
  return model;
}

}  // namespace

TEST_CASE("graded kernels equal ideal-sum dimensions on random models") {
  std::mt19937_64 rng(20250810);
  std::uniform_int_distribution<std::size_t> d_draw(1, 2);
  std::uniform_int_distribution<std::size_t> k_draw(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const auto model = random_model(d_draw(rng), k_draw(rng), rng);
    const auto rs = statmodel::assemble_pgen(model);
    const std::size_t m = model.h_dim();
    const auto levels = hilbert::graded_kernels(rs.p_gen, m, 3);
    std::size_t ambient = 1;
    for (std::size_t n = 2; n <= 3; ++n) {
      ambient = 1;
      for (std::size_t i = 0; i < n; ++i) ambient *= m;
      CHECK(levels[n].dim() == ambient - hilbert::ideal_dimension(rs.r_gen, m, n));
    }
  }
}

TEST_CASE("adjointness of annihilation against creation on random models") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 8; ++trial) {
    const auto model = random_model(1 + trial % 2, 1 + trial % 3, rng);
    const auto rs = statmodel::assemble_pgen(model);
    const auto realization = fock::build_fock(model, rs, 3);
    const fock::OperatorTable ops(realization);
    for (std::size_t gen = 0; gen < model.h_dim(); ++gen)
      for (std::size_t n = 1; n <= 3; ++n) {
        const RationalMatrix lhs = ops.annihilation(gen, n).transpose() *
                                   realization.levels[n - 1].gram;
        const RationalMatrix rhs =
            realization.levels[n].gram * ops.creation(gen, n - 1);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("determinism: assembling and serializing twice matches bytewise") {
  std::mt19937_64 rng_a(99), rng_b(99);
  const auto model_a = random_model(2, 2, rng_a);
  const auto model_b = random_model(2, 2, rng_b);
  const auto rs_a = statmodel::assemble_pgen(model_a);
  const auto rs_b = statmodel::assemble_pgen(model_b);
  CHECK(rs_a.p_gen.to_text() == rs_b.p_gen.to_text());
  CHECK(rs_a.r_gen.basis().to_text() == rs_b.r_gen.basis().to_text());
  const auto levels_a = hilbert::graded_kernels(rs_a.p_gen, model_a.h_dim(), 3);
  const auto levels_b = hilbert::graded_kernels(rs_b.p_gen, model_b.h_dim(), 3);
  for (std::size_t n = 0; n <= 3; ++n)
    CHECK(levels_a[n].basis().to_text() == levels_b[n].basis().to_text());
}

TEST_CASE("u(d) equivariance of random assemblies under signed permutations") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 10; ++trial) {
    const auto model = random_model(2, 2, rng);
    const auto rs = statmodel::assemble_pgen(model);
    RationalMatrix swap(2, 2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    RationalMatrix flip = RationalMatrix::identity(2);
    flip.at(1, 1) = -1;
    CHECK(statmodel::equivariant_under(rs, swap));
    CHECK(statmodel::equivariant_under(rs, flip));
  }
}

TEST_CASE("double dual on random relation subspaces") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 10; ++trial) {
    const auto model = random_model(1, 3, rng);
    const auto dual = koszul::dual_relations_single_mode(model);
    CHECK(dual.r_perp.dim() + model.w_sym.dim() == 9);
    CHECK(koszul::dual_of(dual.r_perp, model.g).r_perp == model.w_sym);
  }
}

TEST_CASE("termination soundness on random single-mode models") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 10; ++trial) {
    const auto model = random_model(1, 2, rng);
    const auto series = hilbert::single_mode_series(model, 4);
    if (series.terminated_at && *series.terminated_at + 1 <= 4) {
      const RationalMatrix p = hilbert::single_mode_projector(model);
      CHECK(hilbert::graded_kernel(p, model.k_dim, *series.terminated_at + 1)
                .space.dim() == 0);
    }
  }
}
