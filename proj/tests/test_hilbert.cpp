#include <doctest.h>

#include "transtat/hilbert.hpp"
#include "transtat/statmodel.hpp"

using namespace transtat;
using statmodel::assemble_pgen;
using statmodel::preset;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> values) {
  std::vector<Integer> out;
  for (const auto v : values) out.emplace_back(v);
  return out;
}

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer result = 1;
  for (std::size_t i = 0; i < k; ++i) {
    result *= Integer(n - i);
    result /= Integer(i + 1);
  }
  return result;
}

}  // namespace

TEST_CASE("graded kernel base cases") {
  const auto model = preset("fermion", 1);
  const RationalMatrix p = hilbert::single_mode_projector(model);  // [1]
  CHECK(hilbert::graded_kernel(p, 1, 0).space.dim() == 1);
  CHECK(hilbert::graded_kernel(p, 1, 1).space.dim() == 1);
  CHECK(hilbert::graded_kernel(p, 1, 2).space.dim() == 0);

  const auto boson = preset("boson", 1);
  const RationalMatrix pb = hilbert::single_mode_projector(boson);  // [0]
  for (std::size_t n = 0; n <= 5; ++n)
    CHECK(hilbert::graded_kernel(pb, 1, n).space.dim() == 1);
}

TEST_CASE("sec5 single-mode graded kernels: span{h} at degree two, zero above") {
  const auto model = preset("example_sec5");
  const RationalMatrix p = hilbert::single_mode_projector(model);
  const auto w2 = hilbert::graded_kernel(p, 3, 2);
  REQUIRE(w2.space.dim() == 1);
  RationalVector h(9);
  h[0] = h[4] = h[8] = 1;
  CHECK(w2.space == Subspace::from_spanning(9, {h}));
  CHECK(hilbert::graded_kernel(p, 3, 3).space.dim() == 0);
}

TEST_CASE("incremental levels equal the direct intersections") {
  for (const char* name : {"boson", "fermion"}) {
    const auto model = preset(name, 2);
    const auto rs = assemble_pgen(model);
    const auto levels = hilbert::graded_kernels(rs.p_gen, model.h_dim(), 4);
    for (std::size_t n = 0; n <= 4; ++n)
      CHECK(levels[n] == hilbert::graded_kernel(rs.p_gen, model.h_dim(), n).space);
  }
  // sec5 single mode up to degree 4 (ambient 81).
  const auto sec5 = preset("example_sec5");
  const RationalMatrix p = hilbert::single_mode_projector(sec5);
  const auto levels = hilbert::graded_kernels(p, 3, 4);
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(levels[n] == hilbert::graded_kernel(p, 3, n).space);
  // sec5 full model at degree 3 (ambient 216).
  const auto rs = assemble_pgen(sec5);
  const auto full_levels = hilbert::graded_kernels(rs.p_gen, 6, 3);
  CHECK(full_levels[3] == hilbert::graded_kernel(rs.p_gen, 6, 3).space);
}

TEST_CASE("single-mode series for the presets") {
  CHECK(hilbert::single_mode_series(preset("boson", 2), 6).coeffs ==
        ints({1, 1, 1, 1, 1, 1, 1}));
  CHECK_FALSE(hilbert::single_mode_series(preset("boson", 2), 6).terminated_at);

  const auto fermion = hilbert::single_mode_series(preset("fermion", 2), 6);
  CHECK(fermion.coeffs == ints({1, 1, 0, 0, 0, 0, 0}));
  CHECK(fermion.terminated_at == 2);

  const auto sec5 = hilbert::single_mode_series(preset("example_sec5"), 6);
  CHECK(sec5.coeffs == ints({1, 3, 1, 0, 0, 0, 0}));
  CHECK(sec5.terminated_at == 3);
}

TEST_CASE("full series: binomial families") {
  {
    const auto model = preset("fermion", 2);
    const auto series = hilbert::full_series(model, assemble_pgen(model), 4);
    CHECK(series.coeffs == ints({1, 2, 1, 0, 0}));
  }
  {
    const auto model = preset("boson", 2);
    const auto series = hilbert::full_series(model, assemble_pgen(model), 4);
    CHECK(series.coeffs == ints({1, 2, 3, 4, 5}));
  }
  for (std::size_t d : {1, 2, 3}) {
    const auto boson = preset("boson", d);
    const auto series = hilbert::full_series(boson, assemble_pgen(boson), 6);
    for (std::size_t n = 0; n <= 6; ++n)
      CHECK(series.coeffs[n] == binomial(n + d - 1, d - 1));
    const auto fermion = preset("fermion", d);
    const auto fs = hilbert::full_series(fermion, assemble_pgen(fermion), 6);
    for (std::size_t n = 0; n <= 6; ++n) CHECK(fs.coeffs[n] == binomial(d, n));
  }
}

TEST_CASE("sec5 full series: computed values for both completions") {
  const auto plain = preset("example_sec5");
  const auto series = hilbert::full_series(plain, assemble_pgen(plain), 4);
  CHECK(series.coeffs == ints({1, 6, 12, 12, 13}));

  const auto completed = preset("example_sec5_completed");
  const auto cs = hilbert::full_series(completed, assemble_pgen(completed), 4);
  CHECK(cs.coeffs == ints({1, 6, 11, 0, 0}));
  CHECK(cs.terminated_at == 3);
}

TEST_CASE("factorization check") {
  for (std::size_t d : {2, 3}) {
    const auto boson = preset("boson", d);
    CHECK(hilbert::check_factorization(boson, assemble_pgen(boson), 5).passed);
    const auto fermion = preset("fermion", d);
    CHECK(hilbert::check_factorization(fermion, assemble_pgen(fermion), 5).passed);
  }
  // The naive multi-mode completion of the sec5 data must mismatch at degree
  // two: the full computation gives 12 survivors, the single-mode square 11.
  const auto plain = preset("example_sec5");
  const auto report = hilbert::check_factorization(plain, assemble_pgen(plain), 4);
  CHECK_FALSE(report.passed);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->context.at("degree") == 2);
  CHECK(report.witness->context.at("full_coefficient") == "12");
  CHECK(report.witness->context.at("single_mode_power_coefficient") == "11");
}

TEST_CASE("ideal-dimension oracle agrees with the kernel computation") {
  for (const char* name :
       {"boson", "fermion", "example_sec5", "example_sec5_completed"}) {
    const auto model = preset(name);
    const auto rs = assemble_pgen(model);
    const std::size_t m = model.h_dim();
    const auto levels = hilbert::graded_kernels(rs.p_gen, m, 3);
    for (std::size_t n = 2; n <= 3; ++n) {
      std::size_t ambient = 1;
      for (std::size_t i = 0; i < n; ++i) ambient *= m;
      CHECK(levels[n].dim() ==
            ambient - hilbert::ideal_dimension(rs.r_gen, m, n));
    }
  }
}

TEST_CASE("termination soundness: an explicit level beyond the certificate is zero") {
  const auto model = preset("example_sec5");
  const RationalMatrix p = hilbert::single_mode_projector(model);
  const auto series = hilbert::single_mode_series(model, 5);
  REQUIRE(series.terminated_at == 3);
  CHECK(hilbert::graded_kernel(p, 3, 4).space.dim() == 0);
}

TEST_CASE("monotone embedding bound") {
  for (const char* name : {"boson", "fermion", "example_sec5"}) {
    const auto model = preset(name, 2);
    const auto rs = assemble_pgen(model);
    const auto levels = hilbert::graded_kernels(rs.p_gen, model.h_dim(), 4);
    for (std::size_t n = 0; n + 1 <= 4; ++n)
      CHECK(levels[n + 1].dim() <= levels[n].dim() * model.h_dim());
  }
}

TEST_CASE("power series helper") {
  CHECK(hilbert::power_series(ints({1, 1, 1}), 2, 4) == ints({1, 2, 3, 2, 1}));
  CHECK(hilbert::power_series(ints({1, 1}), 3, 3) == ints({1, 3, 3, 1}));
  CHECK(hilbert::power_series(ints({1, 3, 1}), 2, 4) == ints({1, 6, 11, 6, 1}));
}
