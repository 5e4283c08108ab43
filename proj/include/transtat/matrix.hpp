#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "transtat/rational.hpp"

namespace transtat {

/// Dense matrix with exact rational entries, row-major storage.
/// Dimensions are fixed at construction; all arithmetic is exact.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t rows, std::size_t cols) {
    return RationalMatrix(rows, cols);
  }
  static RationalMatrix from_rows(std::size_t cols,
                                  const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const Rational& at(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    assert(r < rows_);
    return {data_.data() + r * cols_, cols_};
  }
  RationalVector row_vector(std::size_t r) const;
  RationalVector col_vector(std::size_t c) const;
  void swap_rows(std::size_t a, std::size_t b);

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_identity() const;
  Rational trace() const;
  RationalMatrix transpose() const;

  /// Matrix-vector product m·v.
  RationalVector apply(std::span<const Rational> v) const;

  bool operator==(const RationalMatrix& other) const = default;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& scalar);

  /// Canonical text form, used by determinism tests.
  std::string to_text() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, RationalMatrix m);

/// Low-level computational kernels.  Each comes in a serial reference
/// version and an OpenMP version; both produce identical bytes, and the
/// unqualified entry points dispatch to the parallel one.
namespace kernels {

RationalMatrix multiply_serial(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix multiply_parallel(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

RationalMatrix kron_serial(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix kron_parallel(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref_serial(RationalMatrix& m);
std::vector<std::size_t> rref_parallel(RationalMatrix& m);
std::vector<std::size_t> rref(RationalMatrix& m);

}  // namespace kernels

}  // namespace transtat
