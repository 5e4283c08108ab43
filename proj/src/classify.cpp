#include "transtat/classify.hpp"

#include <algorithm>
#include <sstream>

#include "transtat/errors.hpp"
#include "transtat/exactla.hpp"
#include "transtat/matrix.hpp"

namespace transtat::classify {

namespace {

// Rational polynomials, constant term first.  Plain dense vectors are enough
// for Sturm sequences at these degrees.
using RatPoly = std::vector<Rational>;

RatPoly trim(RatPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

RatPoly to_rat(const IntPoly& p) {
  RatPoly out;
  out.reserve(p.coeffs.size());
  for (const auto& c : p.coeffs) out.emplace_back(c);
  return out;
}

Rational eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(Rational(i) * p[i]);
  return trim(out);
}

// Remainder of a by b (b nonzero).
RatPoly rem(RatPoly a, const RatPoly& b) {
  a = trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a = trim(a);
  }
  return a;
}

RatPoly quotient(RatPoly a, const RatPoly& b) {
  a = trim(a);
  RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a = trim(a);
  }
  return trim(q);
}

RatPoly monic_gcd(RatPoly a, RatPoly b) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    RatPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const Rational inv = Rational(1) / a.back();
    for (auto& c : a) c *= inv;
  }
  return a;
}

int sign(const Rational& x) { return x.is_zero() ? 0 : (x > 0 ? 1 : -1); }

std::size_t sign_variations(const std::vector<RatPoly>& sturm, const Rational& x) {
  std::size_t variations = 0;
  int last = 0;
  for (const auto& p : sturm) {
    const int s = sign(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  std::vector<RatPoly> seq;
  seq.push_back(trim(p));
  seq.push_back(derivative(p));
  while (!seq.back().empty() && seq.back().size() > 1) {
    RatPoly r = rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  return seq;
}

// Cauchy bound: every root z satisfies |z| < 1 + max |a_i / a_deg|.
Rational root_bound(const RatPoly& p) {
  Rational best = 0;
  const Rational& lead = p.back();
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Rational ratio = abs(p[i] / lead);
    if (ratio > best) best = ratio;
  }
  return best + 1;
}

// Distinct real roots of a square-free polynomial in (lo, hi), both
// endpoints known non-roots, certified by Sturm counting; appends the count
// data to `log`.
std::size_t count_roots_squarefree(const RatPoly& sf, const Rational& lo,
                                   const Rational& hi, std::ostringstream* log) {
  const auto seq = sturm_sequence(sf);
  const std::size_t v_lo = sign_variations(seq, lo);
  const std::size_t v_hi = sign_variations(seq, hi);
  if (log) {
    *log << "sturm[deg " << sf.size() - 1 << "] on (" << lo << "," << hi
         << "]: V(lo)=" << v_lo << " V(hi)=" << v_hi << " roots=" << v_lo - v_hi
         << "; ";
  }
  return v_lo - v_hi;
}

bool all_roots_real_signed(const IntPoly& p, bool negative, std::ostringstream* log) {
  RatPoly current = to_rat(p);
  current = trim(current);
  if (current.empty()) return false;  // zero polynomial
  while (current.size() > 1) {
    if (current.front().is_zero()) return false;  // root at 0
    const RatPoly deriv = derivative(current);
    const RatPoly g = monic_gcd(current, deriv);
    const RatPoly sf = g.size() <= 1 ? current : quotient(current, g);
    const Rational bound = root_bound(sf);
    const Rational lo = negative ? -bound : Rational(0);
    const Rational hi = negative ? Rational(0) : bound;
    const std::size_t roots = count_roots_squarefree(sf, lo, hi, log);
    if (roots != sf.size() - 1) return false;
    current = g;  // remaining multiplicities
  }
  return true;
}

std::string join_integers(const std::vector<Integer>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + "]";
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::transfermionic: return "transfermionic";
    case Kind::transbosonic: return "transbosonic";
    case Kind::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

std::size_t sturm_real_root_count(const IntPoly& p, const Rational& lo,
                                  const Rational& hi) {
  if (p.is_zero()) throw ValidationError("sturm_real_root_count: zero polynomial");
  if (!(lo < hi)) throw ValidationError("sturm_real_root_count: lo must be < hi");
  const RatPoly rp = to_rat(p);
  if (eval(rp, lo).is_zero() || eval(rp, hi).is_zero())
    throw ValidationError(
        "sturm_real_root_count: endpoint is a root; perturb the interval");
  // Square-free part so that the variation count is the distinct-root count.
  const RatPoly g = monic_gcd(rp, derivative(rp));
  const RatPoly sf = g.size() <= 1 ? rp : quotient(rp, g);
  return count_roots_squarefree(sf, lo, hi, nullptr);
}

bool all_roots_real_negative(const IntPoly& p) {
  return all_roots_real_signed(p, true, nullptr);
}

bool all_roots_real_positive(const IntPoly& p) {
  return all_roots_real_signed(p, false, nullptr);
}

std::optional<IntPoly> fit_reciprocal(const std::vector<Integer>& coeffs,
                                      std::size_t max_degree) {
  const std::size_t n = coeffs.size() - 1;  // highest available degree
  for (std::size_t deg = 0; deg <= max_degree; ++deg) {
    // Unknown q_1..q_deg with q_0 = 1: for every 1 <= t <= n,
    //   Σ_{j=0..min(deg,t)} q_j g_{t-j} = 0.
    RationalMatrix system(n, deg);
    RationalMatrix rhs(n, 1);
    for (std::size_t t = 1; t <= n; ++t) {
      rhs.at(t - 1, 0) = -Rational(coeffs[t]);
      for (std::size_t j = 1; j <= deg && j <= t; ++j)
        system.at(t - 1, j - 1) = Rational(coeffs[t - j]);
    }
    // Least-degree exact solution: solve the overdetermined system by
    // elimination on the stacked [system | rhs].
    RationalMatrix aug(n, deg + 1);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < deg; ++c) aug.at(r, c) = system.at(r, c);
      aug.at(r, deg) = rhs.at(r, 0);
    }
    const auto red = exactla::rref(aug);
    bool inconsistent = false;
    for (const auto p : red.pivots)
      if (p == deg) inconsistent = true;
    if (inconsistent) continue;
    // Underdetermined systems take the particular solution with free
    // coefficients zero.
    RatPoly q(deg + 1, Rational(0));
    q[0] = 1;
    for (std::size_t r = 0; r < red.pivots.size(); ++r)
      q[red.pivots[r] + 1] = red.matrix.at(r, deg);
    // Integer coefficients are required by the classification theorem.
    for (const auto& c : q)
      if (denominator(c) != 1) return std::nullopt;
    std::vector<Integer> out;
    for (const auto& c : q) out.push_back(numerator(c));
    return IntPoly(std::move(out));
  }
  return std::nullopt;
}

std::vector<Integer> expand_rational(const IntPoly& num, const IntPoly& den,
                                     std::size_t n_max) {
  if (den.coeffs.empty() || den.coeffs[0] == 0)
    throw ValidationError("expand_rational: denominator constant term must be nonzero");
  if (den.coeffs[0] != 1 && den.coeffs[0] != -1)
    throw ValidationError("expand_rational: denominator must have unit constant term");
  const Integer d0 = den.coeffs[0];
  std::vector<Integer> out(n_max + 1, Integer(0));
  for (std::size_t t = 0; t <= n_max; ++t) {
    Integer acc = t < num.coeffs.size() ? num.coeffs[t] : Integer(0);
    for (std::size_t j = 1; j <= t && j < den.coeffs.size(); ++j)
      acc -= den.coeffs[j] * out[t - j];
    out[t] = acc / d0;
  }
  return out;
}

std::optional<RationalFit> rational_fit(const std::vector<Integer>& coeffs,
                                        std::size_t max_num_degree,
                                        std::size_t max_den_degree) {
  for (std::size_t total = 0; total <= max_num_degree + max_den_degree; ++total) {
    for (std::size_t dq = 0; dq <= std::min(total, max_den_degree); ++dq) {
      const std::size_t dp = total - dq;
      if (dp > max_num_degree) continue;
      // P = Q·G (mod t^(N+1)) with q_0 = 1: unknowns p_0..p_dp, q_1..q_dq.
      const std::size_t n = coeffs.size() - 1;
      const std::size_t unknowns = dp + 1 + dq;
      RationalMatrix aug(n + 1, unknowns + 1);
      for (std::size_t t = 0; t <= n; ++t) {
        if (t <= dp) aug.at(t, t) = -1;
        for (std::size_t j = 1; j <= dq && j <= t; ++j)
          aug.at(t, dp + j) = Rational(coeffs[t - j]);
        aug.at(t, unknowns) = -Rational(coeffs[t]);
      }
      const auto red = exactla::rref(aug);
      bool inconsistent = false;
      for (const auto p : red.pivots)
        if (p == unknowns) inconsistent = true;
      if (inconsistent) continue;
      RatPoly sol(unknowns, Rational(0));
      for (std::size_t r = 0; r < red.pivots.size(); ++r)
        sol[red.pivots[r]] = red.matrix.at(r, unknowns);
      RatPoly p(sol.begin(), sol.begin() + dp + 1);
      RatPoly q(dq + 1, Rational(0));
      q[0] = 1;
      for (std::size_t j = 1; j <= dq; ++j) q[j] = sol[dp + j];
      std::vector<Integer> pnum, qnum;
      bool integral = true;
      for (const auto& c : p) integral = integral && denominator(c) == 1;
      for (const auto& c : q) integral = integral && denominator(c) == 1;
      if (!integral) continue;
      for (const auto& c : p) pnum.push_back(numerator(c));
      for (const auto& c : q) qnum.push_back(numerator(c));
      return RationalFit{IntPoly(std::move(pnum)), IntPoly(std::move(qnum))};
    }
  }
  return std::nullopt;
}

Classification classify_series(const hilbert::SeriesCoeffs& series,
                               std::size_t max_fit_degree) {
  Classification result;
  const auto& g = series.coeffs;
  if (g.empty() || g[0] != 1) {
    result.certificate = "series must start with g_0 = 1";
    return result;
  }
  if (!series.terminated_at && g.size() < 2 * max_fit_degree + 1)
    throw ValidationError(
        "classify: need at least 2*max_fit_degree+1 coefficients or a "
        "termination certificate");

  std::ostringstream log;
  if (series.terminated_at) {
    // Candidate Q- is the series polynomial itself.
    IntPoly q_minus(g);
    for (const auto& c : q_minus.coeffs) {
      if (c <= 0) {
        result.certificate = "terminated series has a non-positive coefficient";
        return result;
      }
    }
    if (q_minus.degree() == 0 || all_roots_real_signed(q_minus, true, &log)) {
      result.kind = Kind::transfermionic;
      result.signature = q_minus.coeffs;
      result.certificate =
          "Q- = " + join_integers(q_minus.coeffs) +
          " has all roots real and negative (with multiplicity): " + log.str();
      return result;
    }
    result.certificate = "terminated series polynomial " +
                         join_integers(q_minus.coeffs) +
                         " does not have all roots real negative: " + log.str();
    return result;
  }

  const auto fitted = fit_reciprocal(g, max_fit_degree);
  if (!fitted) {
    result.certificate = "no integer polynomial Q+ of degree <= " +
                         std::to_string(max_fit_degree) +
                         " satisfies Q+ * G = 1 (mod t^N+1)";
    return result;
  }
  if (fitted->degree() == 0 || all_roots_real_signed(*fitted, false, &log)) {
    result.kind = Kind::transbosonic;
    result.signature = fitted->coeffs;
    result.certificate =
        "Q+ = " + join_integers(fitted->coeffs) + " with Q+(0) = 1 satisfies " +
        "Q+ * G = 1 (mod t^N+1) and has all roots real and positive: " + log.str();
    return result;
  }
  result.certificate = "fitted Q+ = " + join_integers(fitted->coeffs) +
                       " does not have all roots real positive: " + log.str();
  return result;
}

}  // namespace transtat::classify
