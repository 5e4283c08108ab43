#include <cstdint>

#include "transtat/errors.hpp"
#include "transtat/guard.hpp"
#include "transtat/matrix.hpp"

// Data-parallel inner loops.  Work is split across independent output rows
// only, and every entry is accumulated in a fixed order, so the parallel
// versions are byte-identical to the serial references for any thread count.

namespace transtat::kernels {

namespace {

constexpr std::size_t kParallelRowThreshold = 32;

// Accumulates a[i][k] * b[k][:] into out row i, skipping zero entries.
// Rational relation projectors are sparse in practice; the skip dominates.
inline void multiply_row(const RationalMatrix& a, const RationalMatrix& b,
                         std::size_t i, RationalMatrix& out) {
  const std::size_t inner = a.cols();
  const std::size_t cols = b.cols();
  for (std::size_t k = 0; k < inner; ++k) {
    const Rational& aik = a.at(i, k);
    if (aik.is_zero()) continue;
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& bkj = b.at(k, j);
      if (bkj.is_zero()) continue;
      out.at(i, j) += aik * bkj;
    }
  }
}

inline void check_multiply_shapes(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("multiply: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

inline void kron_block(const RationalMatrix& a, const RationalMatrix& b,
                       std::size_t i, RationalMatrix& out) {
  const std::size_t br = b.rows();
  const std::size_t bc = b.cols();
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const Rational& aij = a.at(i, j);
    if (aij.is_zero()) continue;
    for (std::size_t p = 0; p < br; ++p) {
      for (std::size_t q = 0; q < bc; ++q) {
        const Rational& bpq = b.at(p, q);
        if (!bpq.is_zero()) out.at(i * br + p, j * bc + q) = aij * bpq;
      }
    }
  }
}

// Shared elimination driver; `parallel` toggles the row-update loop.
std::vector<std::size_t> rref_impl(RationalMatrix& m, bool parallel) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot_row = rows;
    for (std::size_t r = lead; r < rows; ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row == rows) continue;
    m.swap_rows(lead, pivot_row);
    const Rational pivot = m.at(lead, col);
    if (pivot != 1) {
      const Rational inv = Rational(1) / pivot;
      for (std::size_t c = col; c < cols; ++c) {
        if (!m.at(lead, c).is_zero()) m.at(lead, c) *= inv;
      }
    }
    const auto eliminate = [&](std::size_t r) {
      if (r == lead) return;
      const Rational factor = m.at(r, col);
      if (factor.is_zero()) return;
      for (std::size_t c = col; c < cols; ++c) {
        const Rational& lc = m.at(lead, c);
        if (!lc.is_zero()) m.at(r, c) -= factor * lc;
      }
    };
    if (parallel && rows >= kParallelRowThreshold) {
#pragma omp parallel for schedule(static)
      for (std::int64_t r = 0; r < static_cast<std::int64_t>(rows); ++r) {
        eliminate(static_cast<std::size_t>(r));
      }
    } else {
      for (std::size_t r = 0; r < rows; ++r) eliminate(r);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

}  // namespace

RationalMatrix multiply_serial(const RationalMatrix& a, const RationalMatrix& b) {
  check_multiply_shapes(a, b);
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) multiply_row(a, b, i, out);
  return out;
}

RationalMatrix multiply_parallel(const RationalMatrix& a, const RationalMatrix& b) {
  check_multiply_shapes(a, b);
  RationalMatrix out(a.rows(), b.cols());
  const std::int64_t rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static) if (a.rows() >= kParallelRowThreshold)
  for (std::int64_t i = 0; i < rows; ++i) {
    multiply_row(a, b, static_cast<std::size_t>(i), out);
  }
  return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  return multiply_parallel(a, b);
}

RationalMatrix kron_serial(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) kron_block(a, b, i, out);
  return out;
}

RationalMatrix kron_parallel(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  const std::int64_t rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static) if (a.rows() >= kParallelRowThreshold)
  for (std::int64_t i = 0; i < rows; ++i) {
    kron_block(a, b, static_cast<std::size_t>(i), out);
  }
  return out;
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  return kron_parallel(a, b);
}

std::vector<std::size_t> rref_serial(RationalMatrix& m) { return rref_impl(m, false); }

std::vector<std::size_t> rref_parallel(RationalMatrix& m) { return rref_impl(m, true); }

std::vector<std::size_t> rref(RationalMatrix& m) { return rref_impl(m, true); }

}  // namespace transtat::kernels
