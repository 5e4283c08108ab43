#include "transtat/exactla.hpp"

#include <string>

#include "transtat/errors.hpp"
#include "transtat/guard.hpp"

namespace transtat::exactla {

RrefResult rref(const RationalMatrix& m) {
  RrefResult result{m, {}};
  result.pivots = kernels::rref(result.matrix);
  return result;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return kernels::rref(work).size();
}

Subspace kernel(const RationalMatrix& m) {
  RationalMatrix reduced = m;
  const auto pivots = kernels::rref(reduced);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (const auto p : pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis_rows;
  basis_rows.reserve(n - pivots.size());
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    RationalVector v(n);
    v[fc] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!reduced.at(r, fc).is_zero()) v[pivots[r]] = -reduced.at(r, fc);
    }
    basis_rows.push_back(std::move(v));
  }
  return Subspace::from_spanning(n, basis_rows);
}

Subspace image(const RationalMatrix& m) {
  return Subspace::from_spanning(m.transpose());
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("subspace sum: ambient dimensions differ");
  RationalMatrix stacked(a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.ambient_dim(); ++c)
      stacked.at(r, c) = a.basis().at(r, c);
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < b.ambient_dim(); ++c)
      stacked.at(a.dim() + r, c) = b.basis().at(r, c);
  return Subspace::from_spanning(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("intersect: ambient dimensions differ");
  const Subspace ann_a = kernel(a.basis());
  const Subspace ann_b = kernel(b.basis());
  return kernel(sum(ann_a, ann_b).basis());
}

Subspace annihilator(const Subspace& s, const RationalMatrix& pairing) {
  if (!pairing.is_square() || pairing.rows() != s.ambient_dim())
    throw DimensionError("annihilator: pairing shape mismatch");
  if (rank(pairing) != pairing.rows())
    throw ValidationError("annihilator: degenerate pairing");
  return kernel(kernels::multiply(s.basis(), pairing.transpose()));
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  guard::check(a.rows() * b.rows(), "kron rows");
  guard::check(a.cols() * b.cols(), "kron cols");
  return kernels::kron(a, b);
}

RationalMatrix swap_matrix(std::size_t n) {
  RationalMatrix s(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.at(j * n + i, i * n + j) = 1;
  return s;
}

bool is_symmetric(const RationalMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r + 1; c < m.cols(); ++c)
      if (m.at(r, c) != m.at(c, r)) return false;
  return true;
}

bool is_positive_definite(const RationalMatrix& m) {
  if (!is_symmetric(m)) return false;
  // Pivot-free symmetric elimination: the pivots are ratios of consecutive
  // leading principal minors, so all pivots > 0 iff all minors > 0.
  RationalMatrix work = m;
  const std::size_t n = work.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Rational pivot = work.at(k, k);
    if (pivot <= 0) return false;
    for (std::size_t r = k + 1; r < n; ++r) {
      const Rational factor = work.at(r, k) / pivot;
      if (factor.is_zero()) continue;
      for (std::size_t c = k; c < n; ++c) work.at(r, c) -= factor * work.at(k, c);
    }
  }
  return true;
}

bool is_projector(const RationalMatrix& p, const RationalMatrix& gram) {
  if (!p.is_square()) throw DimensionError("is_projector: p must be square");
  if (!gram.is_square() || gram.rows() != p.rows())
    throw DimensionError("is_projector: gram shape mismatch");
  if (!is_symmetric(gram) || !is_positive_definite(gram))
    throw ValidationError("is_projector: gram must be symmetric positive definite");
  if (kernels::multiply(p, p) != p) return false;
  return kernels::multiply(gram, p) == kernels::multiply(p.transpose(), gram);
}

RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& rhs) {
  if (!a.is_square()) throw DimensionError("solve: matrix must be square");
  if (a.rows() != rhs.rows()) throw DimensionError("solve: rhs shape mismatch");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, n + rhs.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < rhs.cols(); ++c) aug.at(r, n + c) = rhs.at(r, c);
  }
  const auto pivots = kernels::rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw ValidationError("solve: singular matrix");
  RationalMatrix x(n, rhs.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < rhs.cols(); ++c) x.at(r, c) = aug.at(r, n + c);
  return x;
}

RationalMatrix inverse(const RationalMatrix& a) {
  return solve(a, RationalMatrix::identity(a.rows()));
}

RationalMatrix orthogonal_projector(const Subspace& w, const RationalMatrix& gram) {
  const std::size_t n = w.ambient_dim();
  if (!gram.is_square() || gram.rows() != n)
    throw DimensionError("orthogonal_projector: gram shape mismatch");
  if (w.dim() == 0) return RationalMatrix::zero(n, n);
  const RationalMatrix& b = w.basis();
  const RationalMatrix bg = kernels::multiply(b, gram);
  const RationalMatrix m = kernels::multiply(bg, b.transpose());  // PD Gram of the basis
  // P = Bᵀ·M⁻¹·B·gram fixes w, kills its gram-orthogonal complement.
  const RationalMatrix coeffs = solve(m, bg);
  return kernels::multiply(b.transpose(), coeffs);
}

RationalVector apply_at_position(const RationalMatrix& op, std::size_t base,
                                 std::size_t n, std::size_t k,
                                 std::span<const Rational> v) {
  if (op.rows() != base * base || op.cols() != base * base)
    throw DimensionError("apply_at_position: op must act on base^2");
  if (k < 1 || k > n - 1) throw DimensionError("apply_at_position: bad position");
  const std::size_t left = guard::checked_power(base, k - 1, "apply_at_position");
  const std::size_t right = guard::checked_power(base, n - k - 1, "apply_at_position");
  const std::size_t pair = base * base;
  if (v.size() != left * pair * right)
    throw DimensionError("apply_at_position: vector length mismatch");
  RationalVector out(v.size());
  for (std::size_t l = 0; l < left; ++l) {
    for (std::size_t r = 0; r < right; ++r) {
      const std::size_t stride = right;
      const std::size_t offset = l * pair * right + r;
      for (std::size_t w = 0; w < pair; ++w) {
        Rational acc = 0;
        for (std::size_t u = 0; u < pair; ++u) {
          const Rational& c = op.at(w, u);
          if (c.is_zero()) continue;
          const Rational& x = v[offset + u * stride];
          if (!x.is_zero()) acc += c * x;
        }
        out[offset + w * stride] = std::move(acc);
      }
    }
  }
  return out;
}

RationalMatrix shifted_operator(const RationalMatrix& op, std::size_t base,
                                std::size_t n, std::size_t k) {
  const std::size_t left = guard::checked_power(base, k - 1, "shifted_operator");
  const std::size_t right = guard::checked_power(base, n - k - 1, "shifted_operator");
  return kron(kron(RationalMatrix::identity(left), op),
              RationalMatrix::identity(right));
}

RationalVector apply_tensor_gram(const RationalMatrix& gram_factor, std::size_t n,
                                 std::span<const Rational> v) {
  const std::size_t b = gram_factor.rows();
  if (!gram_factor.is_square())
    throw DimensionError("apply_tensor_gram: factor must be square");
  RationalVector cur(v.begin(), v.end());
  if (n == 0) return cur;
  const std::size_t total = guard::checked_power(b, n, "apply_tensor_gram");
  if (cur.size() != total)
    throw DimensionError("apply_tensor_gram: vector length mismatch");
  // Apply the factor on each tensor slot in turn.
  for (std::size_t slot = 0; slot < n; ++slot) {
    std::size_t right = 1;
    for (std::size_t i = slot + 1; i < n; ++i) right *= b;
    const std::size_t left = total / (right * b);
    RationalVector next(total);
    for (std::size_t l = 0; l < left; ++l) {
      for (std::size_t r = 0; r < right; ++r) {
        const std::size_t offset = l * b * right + r;
        for (std::size_t w = 0; w < b; ++w) {
          Rational acc = 0;
          for (std::size_t u = 0; u < b; ++u) {
            const Rational& c = gram_factor.at(w, u);
            if (c.is_zero()) continue;
            const Rational& x = cur[offset + u * right];
            if (!x.is_zero()) acc += c * x;
          }
          next[offset + w * right] = std::move(acc);
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace transtat::exactla
