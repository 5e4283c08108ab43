// Timing comparison of the serial reference kernels against the OpenMP
// versions, on synthetic rational matrices and on a representative braid
// workload.  Run with --quick for a smoke-sized pass.

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "transtat/exactla.hpp"
#include "transtat/matrix.hpp"
#include "transtat/statmodel.hpp"

using transtat::Rational;
using transtat::RationalMatrix;

namespace {

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                             int density_percent) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numer(-9, 9);
  std::uniform_int_distribution<int> denom(1, 6);
  std::uniform_int_distribution<int> keep(1, 100);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng) <= density_percent) m.at(r, c) = Rational(numer(rng), denom(rng));
  return m;
}

template <typename F>
double time_once(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void row(const std::string& name, double serial, double parallel) {
  std::cout << name << ": serial " << serial << " s, parallel " << parallel
            << " s, speedup " << (parallel > 0 ? serial / parallel : 0.0) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const std::size_t n = quick ? 48 : 160;
#ifdef _OPENMP
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "openmp not enabled; parallel kernels fall back to serial\n";
#endif

  const RationalMatrix a = random_matrix(n, n, 1, 35);
  const RationalMatrix b = random_matrix(n, n, 2, 35);

  RationalMatrix out_serial, out_parallel;
  const double mul_serial =
      time_once([&] { out_serial = transtat::kernels::multiply_serial(a, b); });
  const double mul_parallel =
      time_once([&] { out_parallel = transtat::kernels::multiply_parallel(a, b); });
  if (out_serial != out_parallel) {
    std::cerr << "multiply mismatch between serial and parallel kernels\n";
    return 1;
  }
  row("multiply " + std::to_string(n) + "^3", mul_serial, mul_parallel);

  const RationalMatrix ka = random_matrix(n / 4, n / 4, 3, 60);
  const RationalMatrix kb = random_matrix(n / 4, n / 4, 4, 60);
  RationalMatrix kron_serial, kron_parallel;
  const double kr_serial =
      time_once([&] { kron_serial = transtat::kernels::kron_serial(ka, kb); });
  const double kr_parallel =
      time_once([&] { kron_parallel = transtat::kernels::kron_parallel(ka, kb); });
  if (kron_serial != kron_parallel) {
    std::cerr << "kron mismatch between serial and parallel kernels\n";
    return 1;
  }
  row("kron " + std::to_string(n / 4) + "x" + std::to_string(n / 4), kr_serial,
      kr_parallel);

  RationalMatrix r1 = random_matrix(n, n + n / 2, 5, 40);
  RationalMatrix r2 = r1;
  const double rr_serial = time_once([&] { transtat::kernels::rref_serial(r1); });
  const double rr_parallel = time_once([&] { transtat::kernels::rref_parallel(r2); });
  if (r1 != r2) {
    std::cerr << "rref mismatch between serial and parallel kernels\n";
    return 1;
  }
  row("rref " + std::to_string(n) + "x" + std::to_string(n + n / 2), rr_serial,
      rr_parallel);

  // Representative workload: both sides of the braid identity for the
  // built-in three-dimensional internal example.
  const auto model = transtat::statmodel::preset("example_sec5");
  const auto rs = transtat::statmodel::assemble_pgen(model);
  const std::size_t m = model.h_dim();
  const RationalMatrix reflection =
      RationalMatrix::identity(rs.ambient) - Rational(2) * rs.p_gen;
  const RationalMatrix id = RationalMatrix::identity(m);
  const RationalMatrix a12 = transtat::exactla::kron(reflection, id);
  const RationalMatrix a23 = transtat::exactla::kron(id, reflection);
  RationalMatrix w_serial, w_parallel;
  const double yb_serial = time_once([&] {
    w_serial = transtat::kernels::multiply_serial(
        transtat::kernels::multiply_serial(a12, a23), a12);
  });
  const double yb_parallel = time_once([&] {
    w_parallel = transtat::kernels::multiply_parallel(
        transtat::kernels::multiply_parallel(a12, a23), a12);
  });
  if (w_serial != w_parallel) {
    std::cerr << "braid workload mismatch between serial and parallel kernels\n";
    return 1;
  }
  row("braid side on H^3 (dim " + std::to_string(a12.rows()) + ")", yb_serial,
      yb_parallel);
  return 0;
}
