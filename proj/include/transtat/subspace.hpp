#pragma once

#include <cstddef>

#include "transtat/matrix.hpp"

namespace transtat {

/// A linear subspace given by a canonical basis: the rows of `basis()` are
/// in reduced row echelon form with no zero rows, so two subspaces are equal
/// iff their basis matrices are identical.
class Subspace {
 public:
  Subspace() : Subspace(0) {}
  /// The zero subspace of the given ambient dimension.
  explicit Subspace(std::size_t ambient_dim)
      : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace full(std::size_t ambient_dim);
  /// Canonicalizes a spanning set (rows); zero rows are dropped.
  static Subspace from_spanning(const RationalMatrix& rows);
  static Subspace from_spanning(std::size_t ambient_dim,
                                const std::vector<RationalVector>& rows);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  bool contains(std::span<const Rational> v) const;

  bool operator==(const Subspace& other) const = default;

 private:
  Subspace(std::size_t ambient_dim, RationalMatrix canonical_basis)
      : ambient_(ambient_dim), basis_(std::move(canonical_basis)) {}

  std::size_t ambient_;
  RationalMatrix basis_;
};

}  // namespace transtat
