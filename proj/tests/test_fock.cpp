#include <doctest.h>

#include "transtat/fock.hpp"
#include "transtat/statmodel.hpp"

using namespace transtat;
using statmodel::assemble_pgen;
using statmodel::preset;

namespace {

fock::FockRealization build(const char* name, std::size_t d, std::size_t n_max) {
  const auto model = preset(name, d);
  return fock::build_fock(model, assemble_pgen(model), n_max);
}

fock::ExchangeData scalar_ab(long long a, long long b) {
  fock::ExchangeData ex;
  ex.a = fock::Tensor4::zeros(1);
  ex.b = fock::Tensor4::zeros(1);
  ex.a->at(0, 0, 0, 0) = a;
  ex.b->at(0, 0, 0, 0) = b;
  return ex;
}

}  // namespace

TEST_CASE("level dimensions of the presets") {
  CHECK(build("boson", 1, 3).level_dims() == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(build("fermion", 2, 3).level_dims() ==
        std::vector<std::size_t>{1, 2, 1, 0});
  CHECK(build("example_sec5_completed", 2, 4).level_dims() ==
        std::vector<std::size_t>{1, 6, 11, 0, 0});
}

TEST_CASE("level grams are positive definite and level one is the h gram") {
  for (const char* name : {"boson", "fermion", "example_sec5_completed"}) {
    const auto model = preset(name);
    const auto realization = fock::build_fock(model, assemble_pgen(model), 3);
    CHECK(realization.levels[1].gram == model.h_gram());
    for (const auto& level : realization.levels)
      if (level.space.dim() > 0)
        CHECK(exactla::is_positive_definite(level.gram));
  }
}

TEST_CASE("boson creation is the unit matrix in the monomial basis") {
  const auto realization = build("boson", 1, 4);
  for (std::size_t n = 0; n < 4; ++n) {
    const auto op = fock::creation_matrix(realization, 0, 0, n);
    CHECK(op.matrix == RationalMatrix::identity(1));
  }
}

TEST_CASE("fermion creation: ordering coefficient and nilpotency") {
  const auto realization = build("fermion", 2, 2);
  // Level-2 canonical basis vector is X_1⊗X_2 - X_2⊗X_1; creating X_1 on the
  // X_2 state lands on it with coefficient 1/2, creating on X_1 gives zero.
  const auto create1 = fock::creation_matrix(realization, 0, 0, 1);
  CHECK(create1.matrix.at(0, 1) == Rational(1, 2));
  CHECK(create1.matrix.at(0, 0) == 0);
}

TEST_CASE("sec5 single-mode creation hits the degree-two line with weight 1/3") {
  const auto model = preset("example_sec5", 1);
  const auto realization = fock::build_fock(model, assemble_pgen(model), 2);
  REQUIRE(realization.level_dims() == std::vector<std::size_t>{1, 3, 1});
  const auto op = fock::creation_matrix(realization, 0, 0, 1);
  // Π(k_1⊗k_1) = h/3 against the canonical basis vector h of the line.
  CHECK(op.matrix.at(0, 0) == Rational(1, 3));
  CHECK(op.matrix.at(0, 1) == 0);
  CHECK(op.matrix.at(0, 2) == 0);
}

TEST_CASE("annihilation on level one pairs against the h gram") {
  for (const char* name : {"fermion", "example_sec5"}) {
    const auto model = preset(name);
    const auto realization = fock::build_fock(model, assemble_pgen(model), 2);
    const std::size_t m = model.h_dim();
    for (std::size_t i = 0; i < model.d; ++i)
      for (std::size_t alpha = 0; alpha < model.k_dim; ++alpha) {
        const auto op = fock::annihilation_matrix(realization, i, alpha, 1);
        for (std::size_t c = 0; c < m; ++c)
          CHECK(op.matrix.at(0, c) ==
                realization.h_gram.at(model.gen_index(i, alpha), c));
      }
  }
}

TEST_CASE("adjointness holds exactly with the level grams") {
  for (const char* name :
       {"boson", "fermion", "example_sec5", "example_sec5_completed"}) {
    const auto model = preset(name);
    const auto realization = fock::build_fock(model, assemble_pgen(model), 3);
    const fock::OperatorTable ops(realization);
    for (std::size_t gen = 0; gen < model.h_dim(); ++gen) {
      for (std::size_t n = 1; n <= 3; ++n) {
        // ⟨a v, w⟩_{n-1} = ⟨v, a† w⟩_n as matrices:
        // annihilationᵀ·Γ_{n-1} = Γ_n·creation.
        const RationalMatrix lhs =
            ops.annihilation(gen, n).transpose() * realization.levels[n - 1].gram;
        const RationalMatrix rhs =
            realization.levels[n].gram * ops.creation(gen, n - 1);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("vacuum two-point function equals the h gram") {
  for (const char* name :
       {"boson", "fermion", "example_sec5", "example_sec5_completed"}) {
    const auto model = preset(name);
    const auto realization = fock::build_fock(model, assemble_pgen(model), 2);
    const fock::OperatorTable ops(realization);
    CHECK(fock::vacuum_two_point(ops).passed);
  }
  // Non-identity internal form: the two-point function follows g.
  statmodel::StatModel model = preset("fermion", 1);
  model.k_dim = 2;
  model.g = RationalMatrix(2, 2);
  model.g.at(0, 0) = 2;
  model.g.at(0, 1) = model.g.at(1, 0) = 1;
  model.g.at(1, 1) = 1;
  model.w_sym = Subspace::full(4);
  model.w_ext = Subspace(4);
  model.order = {0, 1};
  model.validate();
  const auto realization = fock::build_fock(model, assemble_pgen(model), 2);
  const fock::OperatorTable ops(realization);
  CHECK(fock::vacuum_two_point(ops).passed);
}

TEST_CASE("ab bracket: boson and fermion with the standard scalars") {
  {
    const auto realization = build("boson", 2, 4);
    const fock::OperatorTable ops(realization);
    CHECK(fock::check_ab_bracket(ops, scalar_ab(0, 1)).passed);
  }
  {
    const auto realization = build("fermion", 2, 4);
    const fock::OperatorTable ops(realization);
    CHECK(fock::check_ab_bracket(ops, scalar_ab(1, 0)).passed);
  }
}

TEST_CASE("ab bracket negative control: wrong statistics fail at level one") {
  const auto realization = build("boson", 2, 3);
  const fock::OperatorTable ops(realization);
  const auto report = fock::check_ab_bracket(ops, scalar_ab(1, 0));
  CHECK_FALSE(report.passed);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->context.at("relation") == "mixed");
}

TEST_CASE("gld identities hold for the pbw presets and the completed example") {
  for (const char* name : {"boson", "fermion", "example_sec5_completed"}) {
    const auto model = preset(name);
    const auto realization = fock::build_fock(model, assemble_pgen(model), 4);
    const fock::OperatorTable ops(realization);
    const auto js = fock::gld_generators(ops);
    CHECK(fock::check_gld(ops, js).passed);
    CHECK(fock::check_number_operator(ops, js).passed);
  }
}

TEST_CASE("boson number operator counts the mode occupation") {
  const auto realization = build("boson", 2, 4);
  const fock::OperatorTable ops(realization);
  const auto js = fock::gld_generators(ops);
  // J_11 on level n has trace Σ n_1 over monomials n_1 + n_2 = n.
  for (std::size_t n = 0; n <= 4; ++n) {
    Rational expected = 0;
    for (std::size_t n1 = 0; n1 <= n; ++n1) expected += Rational(n1);
    CHECK(js[0].level_blocks[n].trace() == expected);
  }
}

TEST_CASE("sec5 completed: trace of J_11 on level two is the occupation sum") {
  const auto realization = build("example_sec5_completed", 2, 2);
  const fock::OperatorTable ops(realization);
  const auto js = fock::gld_generators(ops);
  REQUIRE(realization.level_dim(2) == 11);
  // Bidegree decomposition (2,0) ⊕ (1,1) ⊕ (0,2) with dimensions 1, 9, 1:
  // occupation weights 2·1 + 1·9 + 0·1.
  CHECK(js[0].level_blocks[2].trace() == 11);
  // Total number on the level: Σ_i J_ii has trace n·dim.
  CHECK(js[0].level_blocks[2].trace() + js[3].level_blocks[2].trace() ==
        Rational(2 * 11));
}

TEST_CASE("quadratic kill invariant across the presets") {
  for (const char* name :
       {"boson", "fermion", "example_sec5", "example_sec5_completed"}) {
    const auto model = preset(name);
    const auto rs = assemble_pgen(model);
    const auto realization = fock::build_fock(model, rs, 3);
    const fock::OperatorTable ops(realization);
    CHECK(fock::check_quadratic_kill(ops, rs).passed);
  }
}

TEST_CASE("gld generators against the tensor-lift action") {
  // For the swap-stable presets the generators must agree with the
  // restriction of Σ_p id ⊗ (E_ij⊗id_K) ⊗ id at slot p to each level.
  for (const char* name : {"boson", "fermion", "example_sec5_completed"}) {
    const auto model = preset(name);
    const auto rs = assemble_pgen(model);
    const auto realization = fock::build_fock(model, rs, 3);
    const fock::OperatorTable ops(realization);
    const auto js = fock::gld_generators(ops);
    const std::size_t m = model.h_dim();
    for (std::size_t i = 0; i < model.d; ++i)
      for (std::size_t j = 0; j < model.d; ++j) {
        // e = E_ij ⊗ id_K on H.
        RationalMatrix e(m, m);
        for (std::size_t alpha = 0; alpha < model.k_dim; ++alpha)
          e.at(model.gen_index(i, alpha), model.gen_index(j, alpha)) = 1;
        for (std::size_t n = 1; n <= 3; ++n) {
          const auto& level = realization.levels[n];
          if (level.space.dim() == 0) continue;
          // dGamma(e) applied to each basis row, re-expressed in the basis.
          RationalMatrix lifted(level.space.dim(), level.space.ambient_dim());
          for (std::size_t r = 0; r < level.space.dim(); ++r) {
            RationalVector acc(level.space.ambient_dim());
            RationalVector row(level.space.basis().row(r).begin(),
                               level.space.basis().row(r).end());
            for (std::size_t p = 0; p < n; ++p) {
              // Apply e at slot p.
              std::size_t left = 1, right = 1;
              for (std::size_t q = 0; q < p; ++q) left *= m;
              for (std::size_t q = p + 1; q < n; ++q) right *= m;
              for (std::size_t l = 0; l < left; ++l)
                for (std::size_t rr = 0; rr < right; ++rr)
                  for (std::size_t a = 0; a < m; ++a) {
                    Rational sum = 0;
                    for (std::size_t b = 0; b < m; ++b) {
                      const Rational& coeff = e.at(a, b);
                      if (!coeff.is_zero())
                        sum += coeff * row[(l * m + b) * right + rr];
                    }
                    acc[(l * m + a) * right + rr] += sum;
                  }
            }
            for (std::size_t c = 0; c < acc.size(); ++c) lifted.at(r, c) = acc[c];
          }
          // lifted = M·B for the row-convention matrix M; the level operator
          // acting on coordinate columns is Mᵀ = Γ⁻¹·(Γ·Mᵀ), exact because
          // the lift preserves W_n.
          const RationalMatrix rhs =
              level.basis_gram * lifted.transpose();  // Γ·Mᵀ
          const RationalMatrix coords = exactla::solve(level.gram, rhs);
          CHECK(coords == js[i * model.d + j].level_blocks[n]);
        }
      }
  }
}
