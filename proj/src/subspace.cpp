#include "transtat/subspace.hpp"

#include "transtat/errors.hpp"

namespace transtat {

Subspace Subspace::full(std::size_t ambient_dim) {
  return Subspace(ambient_dim, RationalMatrix::identity(ambient_dim));
}

Subspace Subspace::from_spanning(const RationalMatrix& rows) {
  RationalMatrix reduced = rows;
  const auto pivots = kernels::rref(reduced);
  RationalMatrix basis(pivots.size(), rows.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t c = 0; c < rows.cols(); ++c) basis.at(r, c) = reduced.at(r, c);
  }
  return Subspace(rows.cols(), std::move(basis));
}

Subspace Subspace::from_spanning(std::size_t ambient_dim,
                                 const std::vector<RationalVector>& rows) {
  return from_spanning(RationalMatrix::from_rows(ambient_dim, rows));
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_) {
    throw DimensionError("contains: vector length does not match ambient dimension");
  }
  // Reduce v against the echelon basis; membership iff the remainder is zero.
  RationalVector residual(v.begin(), v.end());
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t lead = 0;
    while (lead < ambient_ && basis_.at(r, lead).is_zero()) ++lead;
    if (lead == ambient_) continue;
    const Rational factor = residual[lead];
    if (factor.is_zero()) continue;
    for (std::size_t c = lead; c < ambient_; ++c) {
      if (!basis_.at(r, c).is_zero()) residual[c] -= factor * basis_.at(r, c);
    }
  }
  for (const auto& x : residual) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace transtat
