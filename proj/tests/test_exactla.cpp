#include <doctest.h>

#include <random>

#include "transtat/errors.hpp"
#include "transtat/exactla.hpp"
#include "transtat/guard.hpp"

using namespace transtat;
using exactla::annihilator;
using exactla::intersect;
using exactla::kernel;
using exactla::kron;
using exactla::rref;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

RationalMatrix mat(std::size_t rows, std::size_t cols,
                   std::initializer_list<long long> entries) {
  RationalMatrix m(rows, cols);
  auto it = entries.begin();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = q(*it++);
  return m;
}

RationalMatrix random_rational(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> numer(-5, 5);
  std::uniform_int_distribution<int> denom(1, 4);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rational(numer(rng), denom(rng));
  return m;
}

// h = Σ k_α ⊗ k_α in a 3-dimensional internal space.
RationalVector h_vector() {
  RationalVector h(9);
  h[0] = h[4] = h[8] = 1;
  return h;
}

}  // namespace

TEST_CASE("rref on the documented cases") {
  auto r1 = rref(mat(2, 2, {1, 2, 2, 4}));
  CHECK(r1.matrix == mat(2, 2, {1, 2, 0, 0}));
  CHECK(r1.pivots == std::vector<std::size_t>{0});

  auto r2 = rref(RationalMatrix::identity(3));
  CHECK(r2.matrix == RationalMatrix::identity(3));
  CHECK(r2.pivots == std::vector<std::size_t>{0, 1, 2});

  auto r3 = rref(mat(2, 2, {0, 1, 1, 0}));
  CHECK(r3.matrix == RationalMatrix::identity(2));
  CHECK(r3.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("kernel basics and exactness") {
  CHECK(kernel(RationalMatrix::zero(2, 2)) == Subspace::full(2));
  CHECK(kernel(RationalMatrix::identity(3)).dim() == 0);

  // Projector onto span{(1,1,1)}/3: kernel is the 2-dim complement and every
  // basis vector is annihilated exactly.
  RationalMatrix p(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) p.at(r, c) = q(1, 3);
  const Subspace ker = kernel(p);
  REQUIRE(ker.dim() == 2);
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    const RationalVector image = p.apply(ker.basis().row(r));
    for (const auto& x : image) CHECK(x.is_zero());
  }
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalMatrix m = random_rational(4 + trial % 3, 5 + trial % 4, rng);
    CHECK(exactla::rank(m) + kernel(m).dim() == m.cols());
  }
}

TEST_CASE("intersect: trivial and exact cases") {
  const Subspace full = Subspace::full(4);
  const Subspace e1 = Subspace::from_spanning(4, {{q(1), q(0), q(0), q(0)}});
  const Subspace e2 = Subspace::from_spanning(4, {{q(0), q(1), q(0), q(0)}});
  CHECK(intersect(full, e1) == e1);
  CHECK(intersect(e1, e2).dim() == 0);
}

TEST_CASE("intersect: (h⊗K) ∩ (K⊗h) is zero in dimension 27") {
  const RationalVector h = h_vector();
  std::vector<RationalVector> left_rows, right_rows;
  for (std::size_t c = 0; c < 3; ++c) {
    RationalVector l(27), r(27);
    for (std::size_t idx = 0; idx < 9; ++idx) {
      l[idx * 3 + c] = h[idx];
      r[c * 9 + idx] = h[idx];
    }
    left_rows.push_back(l);
    right_rows.push_back(r);
  }
  const Subspace left = Subspace::from_spanning(27, left_rows);
  const Subspace right = Subspace::from_spanning(27, right_rows);
  REQUIRE(left.dim() == 3);
  REQUIRE(right.dim() == 3);
  CHECK(intersect(left, right).dim() == 0);

  // Independent oracle: solve h⊗x = y⊗h directly as a stacked linear system
  // in the six unknowns (x, y).
  RationalMatrix system(27, 6);
  for (std::size_t idx = 0; idx < 9; ++idx)
    for (std::size_t c = 0; c < 3; ++c) {
      system.at(idx * 3 + c, c) += h[idx];
      system.at(c * 9 + idx, 3 + c) -= h[idx];
    }
  CHECK(kernel(system).dim() == 0);
}

TEST_CASE("intersect is commutative and associative on canonical bases") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Subspace a = Subspace::from_spanning(random_rational(3, 6, rng));
    const Subspace b = Subspace::from_spanning(random_rational(3, 6, rng));
    const Subspace c = Subspace::from_spanning(random_rational(2, 6, rng));
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
    // dim(a∩b) = dim a + dim b - dim(a+b)
    CHECK(intersect(a, b).dim() ==
          a.dim() + b.dim() - exactla::sum(a, b).dim());
  }
}

TEST_CASE("kron conventions and the mixed-product property") {
  CHECK(kron(RationalMatrix::identity(2), RationalMatrix::identity(3)) ==
        RationalMatrix::identity(6));
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 2 + trial % 5;  // up to 6x6
    const RationalMatrix a = random_rational(n, n, rng);
    const RationalMatrix b = random_rational(n, n, rng);
    const RationalMatrix id = RationalMatrix::identity(n);
    CHECK(kron(a, id) * kron(id, b) == kron(a, b));
    const RationalMatrix c = random_rational(n, n, rng);
    const RationalMatrix d = random_rational(n, n, rng);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  }
}

TEST_CASE("is_projector") {
  CHECK(exactla::is_projector(RationalMatrix::identity(2),
                              RationalMatrix::identity(2)));
  // Idempotent but not self-adjoint for the standard form.
  CHECK_FALSE(exactla::is_projector(mat(2, 2, {1, 1, 0, 0}),
                                    RationalMatrix::identity(2)));
  // Projector onto span{h} in K⊗K: outer(h,h)/3.
  const RationalVector h = h_vector();
  RationalMatrix qh(9, 9);
  for (std::size_t r = 0; r < 9; ++r)
    for (std::size_t c = 0; c < 9; ++c) qh.at(r, c) = h[r] * h[c] / 3;
  CHECK(exactla::is_projector(qh, RationalMatrix::identity(9)));
  CHECK_THROWS_AS(
      exactla::is_projector(RationalMatrix::identity(2), mat(2, 2, {1, 2, 3, 4})),
      ValidationError);
}

TEST_CASE("annihilator") {
  const RationalMatrix pairing = RationalMatrix::identity(9);
  CHECK(annihilator(Subspace(9), pairing) == Subspace::full(9));
  CHECK(annihilator(Subspace::full(9), pairing).dim() == 0);

  // h^⊥ has annihilator exactly the line through h.
  const RationalVector h = h_vector();
  const Subspace h_perp = kernel(RationalMatrix::from_rows(9, {h}));
  REQUIRE(h_perp.dim() == 8);
  const Subspace ann = annihilator(h_perp, pairing);
  REQUIRE(ann.dim() == 1);
  CHECK(ann == Subspace::from_spanning(9, {h}));
  // Pairing of the annihilator against every basis vector vanishes.
  for (std::size_t r = 0; r < h_perp.dim(); ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < 9; ++c)
      acc += ann.basis().at(0, c) * h_perp.basis().at(r, c);
    CHECK(acc.is_zero());
  }
  CHECK_THROWS_AS(annihilator(h_perp, RationalMatrix::zero(9, 9)), ValidationError);
}

TEST_CASE("double annihilator is the identity") {
  std::mt19937_64 rng(17);
  const RationalMatrix pairing = RationalMatrix::identity(6);
  for (int trial = 0; trial < 10; ++trial) {
    const Subspace s = Subspace::from_spanning(random_rational(3, 6, rng));
    CHECK(annihilator(annihilator(s, pairing), pairing) == s);
  }
}

TEST_CASE("serial and parallel kernels agree bytewise") {
  std::mt19937_64 rng(19);
  const RationalMatrix a = random_rational(40, 40, rng);
  const RationalMatrix b = random_rational(40, 40, rng);
  CHECK(kernels::multiply_serial(a, b) == kernels::multiply_parallel(a, b));
  CHECK(kernels::kron_serial(a, b) == kernels::kron_parallel(a, b));
  RationalMatrix r1 = random_rational(40, 55, rng);
  RationalMatrix r2 = r1;
  const auto p1 = kernels::rref_serial(r1);
  const auto p2 = kernels::rref_parallel(r2);
  CHECK(p1 == p2);
  CHECK(r1 == r2);
}

TEST_CASE("determinism: same inputs give identical bytes") {
  std::mt19937_64 rng(23);
  const RationalMatrix a = random_rational(12, 12, rng);
  const RationalMatrix b = random_rational(12, 12, rng);
  CHECK((a * b).to_text() == (a * b).to_text());
  CHECK(kernel(a).basis().to_text() == kernel(a).basis().to_text());
}

TEST_CASE("dimension guard rejects oversized allocations") {
  const std::size_t saved = guard::limit();
  guard::set_limit(64);
  CHECK_THROWS_AS(RationalMatrix(65, 2), GuardError);
  CHECK_THROWS_AS(guard::checked_power(3, 10, "test"), GuardError);
  guard::set_limit(saved);
}

TEST_CASE("tensor position application matches the explicit shifted operator") {
  std::mt19937_64 rng(29);
  const RationalMatrix op = random_rational(9, 9, rng);
  const std::size_t base = 3, n = 3;
  for (std::size_t k = 1; k <= n - 1; ++k) {
    const RationalMatrix shifted = exactla::shifted_operator(op, base, n, k);
    RationalVector v(27);
    for (std::size_t i = 0; i < 27; ++i) v[i] = Rational((int)(i % 5) - 2, 3);
    CHECK(exactla::apply_at_position(op, base, n, k, v) == shifted.apply(v));
  }
}

TEST_CASE("tensor gram application matches the explicit kron product") {
  std::mt19937_64 rng(31);
  RationalMatrix g = random_rational(3, 3, rng);
  g = g + g.transpose();  // any square factor works for the identity check
  const RationalMatrix big = kron(kron(g, g), g);
  RationalVector v(27);
  for (std::size_t i = 0; i < 27; ++i) v[i] = Rational((int)(i % 7) - 3, 2);
  CHECK(exactla::apply_tensor_gram(g, 3, v) == big.apply(v));
}
