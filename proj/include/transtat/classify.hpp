#pragma once

#include <optional>
#include <string>
#include <vector>

#include "transtat/hilbert.hpp"
#include "transtat/rational.hpp"

namespace transtat::classify {

/// Integer polynomial, constant term first, trailing zeros trimmed.
struct IntPoly {
  std::vector<Integer> coeffs;

  explicit IntPoly(std::vector<Integer> c = {});
  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool is_zero() const { return coeffs.empty(); }
};

enum class Kind { transfermionic, transbosonic, indeterminate };

std::string kind_name(Kind kind);

struct Classification {
  Kind kind = Kind::indeterminate;
  std::vector<Integer> signature;  // coefficients of the certifying polynomial
  std::string certificate;         // replayable root-count data or failure reason
};

/// Number of distinct real roots of p in (lo, hi], by exact sign-variation
/// counting on the Sturm sequence.  Neither endpoint may be a root.
std::size_t sturm_real_root_count(const IntPoly& p, const Rational& lo,
                                  const Rational& hi);

/// True iff every root of p is real and negative, multiplicities included
/// (square-free layers are certified by Sturm counts recursively).
bool all_roots_real_negative(const IntPoly& p);
bool all_roots_real_positive(const IntPoly& p);

/// Theorem-style dichotomy: a terminated series must be a polynomial Q- with
/// positive integer coefficients and all roots real negative; otherwise a
/// minimal-degree Q+ with Q+·G = 1 (mod t^(N+1)), Q+(0)=1, integer
/// coefficients and all roots real positive is fitted.  Anything else is
/// indeterminate, with the failing condition named.
Classification classify_series(const hilbert::SeriesCoeffs& series,
                               std::size_t max_fit_degree);

/// Minimal-degree reciprocal fit: Q with Q(0)=1 and Q·G = 1 (mod t^(N+1)).
std::optional<IntPoly> fit_reciprocal(const std::vector<Integer>& coeffs,
                                      std::size_t max_degree);

/// Padé-style exploration: P, Q with P = Q·G (mod t^(N+1)), Q(0)=1, minimal
/// total degree.  Exposed by the CLI for series outside the dichotomy.
struct RationalFit {
  IntPoly numerator;
  IntPoly denominator;
};
std::optional<RationalFit> rational_fit(const std::vector<Integer>& coeffs,
                                        std::size_t max_num_degree,
                                        std::size_t max_den_degree);

/// Coefficients of the series expansion of num/den to degree n_max.
std::vector<Integer> expand_rational(const IntPoly& num, const IntPoly& den,
                                     std::size_t n_max);

}  // namespace transtat::classify
