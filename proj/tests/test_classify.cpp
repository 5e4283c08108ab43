#include <doctest.h>

#include "transtat/classify.hpp"
#include "transtat/errors.hpp"

using namespace transtat;
using classify::Classification;
using classify::classify_series;
using classify::IntPoly;
using classify::Kind;

namespace {

IntPoly poly(std::initializer_list<long long> coeffs) {
  std::vector<Integer> c;
  for (const auto v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

hilbert::SeriesCoeffs series(std::initializer_list<long long> coeffs,
                             std::optional<std::size_t> terminated = std::nullopt) {
  hilbert::SeriesCoeffs s;
  for (const auto v : coeffs) s.coeffs.emplace_back(v);
  s.terminated_at = terminated;
  return s;
}

}  // namespace

TEST_CASE("sturm root counting on the documented cases") {
  CHECK(classify::sturm_real_root_count(poly({1, 1}), Rational(-2), Rational(0)) == 1);
  CHECK(classify::sturm_real_root_count(poly({1, 3, 1}), Rational(-10), Rational(0)) ==
        2);
  CHECK(classify::sturm_real_root_count(poly({1, 1, 1}), Rational(-10),
                                        Rational(10)) == 0);
  // (1+t)^2: one distinct root; multiplicities handled via the square-free part.
  CHECK(classify::sturm_real_root_count(poly({1, 2, 1}), Rational(-2), Rational(0)) ==
        1);
  CHECK_THROWS_AS(classify::sturm_real_root_count(IntPoly(), Rational(0), Rational(1)),
                  ValidationError);
  CHECK_THROWS_AS(
      classify::sturm_real_root_count(poly({1, 1}), Rational(-1), Rational(0)),
      ValidationError);  // endpoint is a root
}

TEST_CASE("all_roots_real_negative handles multiplicity") {
  CHECK(classify::all_roots_real_negative(poly({1, 1})));
  CHECK(classify::all_roots_real_negative(poly({1, 2, 1})));     // (1+t)^2
  CHECK(classify::all_roots_real_negative(poly({1, 3, 3, 1})));  // (1+t)^3
  CHECK(classify::all_roots_real_negative(poly({1, 3, 1})));
  CHECK_FALSE(classify::all_roots_real_negative(poly({1, 1, 1})));   // complex pair
  CHECK_FALSE(classify::all_roots_real_negative(poly({1, -2, 1})));  // roots at +1
  CHECK(classify::all_roots_real_positive(poly({1, -2, 1})));
  CHECK_FALSE(classify::all_roots_real_positive(poly({1, 0, 1})));
}

TEST_CASE("fermion series classifies as transfermionic [1,1]-") {
  const auto result = classify_series(series({1, 1, 0, 0, 0}, 2), 2);
  CHECK(result.kind == Kind::transfermionic);
  CHECK(result.signature == std::vector<Integer>{Integer(1), Integer(1)});
}

TEST_CASE("boson series classifies as transbosonic [1,-1]+") {
  const auto result = classify_series(series({1, 1, 1, 1, 1, 1, 1}), 3);
  CHECK(result.kind == Kind::transbosonic);
  CHECK(result.signature == std::vector<Integer>{Integer(1), Integer(-1)});
}

TEST_CASE("sec5 single-mode series classifies as transfermionic [1,3,1]-") {
  const auto result = classify_series(series({1, 3, 1, 0, 0}, 3), 2);
  CHECK(result.kind == Kind::transfermionic);
  CHECK(result.signature ==
        std::vector<Integer>{Integer(1), Integer(3), Integer(1)});
  CHECK(result.certificate.find("roots=2") != std::string::npos);
}

TEST_CASE("pair statistics with a double root certify as well") {
  const auto result = classify_series(series({1, 2, 1, 0, 0}, 3), 2);
  CHECK(result.kind == Kind::transfermionic);
  CHECK(result.signature ==
        std::vector<Integer>{Integer(1), Integer(2), Integer(1)});
}

TEST_CASE("transbosonic fit of higher degree") {
  // 1/((1-t)(1-2t)): coefficients 2^{n+1} - 1.
  const auto s = series({1, 3, 7, 15, 31, 63, 127, 255, 511});
  const auto result = classify_series(s, 4);
  CHECK(result.kind == Kind::transbosonic);
  CHECK(result.signature ==
        std::vector<Integer>{Integer(1), Integer(-3), Integer(2)});
}

TEST_CASE("indeterminate cases name the failing condition") {
  // Fibonacci-type series: Q+ = 1 - t - t^2 has roots of mixed sign.
  const auto fib = classify_series(series({1, 1, 2, 3, 5, 8, 13, 21, 34}), 4);
  CHECK(fib.kind == Kind::indeterminate);
  CHECK(fib.certificate.find("real") != std::string::npos);

  // Terminated polynomial with complex roots.
  const auto complex_pair = classify_series(series({1, 1, 1, 0, 0}, 3), 2);
  CHECK(complex_pair.kind == Kind::indeterminate);

  // No reciprocal polynomial of bounded degree exists.
  const auto none = classify_series(series({1, 1, 2, 5, 14, 42, 132, 429, 1430}), 2);
  CHECK(none.kind == Kind::indeterminate);
}

TEST_CASE("classification is stable under extending the series") {
  const auto short_run = classify_series(series({1, 1, 1, 1, 1}), 2);
  const auto long_run = classify_series(series({1, 1, 1, 1, 1, 1, 1, 1, 1}), 4);
  CHECK(short_run.kind == long_run.kind);
  CHECK(short_run.signature == long_run.signature);
}

TEST_CASE("round trip: expanding the certificate reproduces the series") {
  // Transfermionic: Q- itself.
  const auto fermionic = classify_series(series({1, 3, 1, 0, 0}, 3), 2);
  const auto expanded = classify::expand_rational(
      IntPoly(fermionic.signature), poly({1}), 4);
  CHECK(expanded == std::vector<Integer>{Integer(1), Integer(3), Integer(1),
                                         Integer(0), Integer(0)});
  // Transbosonic: 1/Q+.
  const auto bosonic = classify_series(series({1, 3, 7, 15, 31, 63, 127, 255, 511}), 4);
  const auto back =
      classify::expand_rational(poly({1}), IntPoly(bosonic.signature), 4);
  CHECK(back == std::vector<Integer>{Integer(1), Integer(3), Integer(7), Integer(15),
                                     Integer(31)});
}

TEST_CASE("insufficient coefficients is an input error") {
  CHECK_THROWS_AS(classify_series(series({1, 1, 1}), 4), ValidationError);
}

TEST_CASE("rational fit recovers a mixed ratio") {
  // G = (1+t)/(1-t): coefficients 1, 2, 2, 2, ...
  const auto fit = classify::rational_fit(
      {Integer(1), Integer(2), Integer(2), Integer(2), Integer(2)}, 2, 2);
  REQUIRE(fit.has_value());
  CHECK(fit->numerator.coeffs == std::vector<Integer>{Integer(1), Integer(1)});
  CHECK(fit->denominator.coeffs == std::vector<Integer>{Integer(1), Integer(-1)});
}
