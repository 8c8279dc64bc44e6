#include "doctest.h"

#include <random>

#include "error.hpp"
#include "exact/bigfloat.hpp"
#include "exact/rational.hpp"
#include "exact/series.hpp"
#include "exact/special.hpp"

using namespace elsv;

namespace {

// Bernoulli numbers from the classical recurrence sum_{k<=n} C(n+1,k) B_k = 0.
std::vector<Rat> bernoulli_numbers_by_recurrence(unsigned n) {
  std::vector<Rat> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rat acc = 0;
    for (unsigned k = 0; k < m; ++k) acc += Rat(binomial(m + 1, k)) * b[k];
    b[m] = -acc / Rat(m + 1);
  }
  return b;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_pq_string(parse_rat("-2/48")) == "-1/24");
  CHECK(to_pq_string(parse_rat("3")) == "3/1");
  CHECK(to_display_string(parse_rat("6/3")) == "2");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("1/x"), Error);
  CHECK_THROWS_AS(parse_rat(""), Error);
  try {
    parse_rat("1/0");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(odd_double_factorial(3) == 15);
}

TEST_CASE("bernoulli polynomials") {
  CHECK(bernoulli_polynomial(1, Rat(1, 2)) == 0);
  CHECK(bernoulli_polynomial(2, Rat(0)) == Rat(1, 6));
  auto numbers = bernoulli_numbers_by_recurrence(20);
  for (unsigned l = 0; l <= 20; ++l) {
    CHECK(bernoulli_polynomial(l, Rat(0)) == numbers[l]);
    Rat sign = l % 2 ? -1 : 1;
    CHECK(bernoulli_polynomial(l, Rat(1)) == sign * numbers[l]);
    for (Rat x : {Rat(1, 3), Rat(2, 5), Rat(-7, 4)}) {
      CHECK(bernoulli_polynomial(l, Rat(1) - x) == sign * bernoulli_polynomial(l, x));
      // B_{l+1}(x+1) - B_{l+1}(x) = (l+1) x^l
      CHECK(bernoulli_polynomial(l + 1, x + 1) - bernoulli_polynomial(l + 1, x) == Rat(l + 1) * rat_pow(x, l));
    }
  }
}

TEST_CASE("series operations") {
  const std::size_t m = 10;
  RatSeries one_plus_t = RatSeries::constant(Rat(1), m) + RatSeries::variable(m);
  CHECK(one_plus_t.log().exp() == one_plus_t);

  RatSeries one_minus_t = RatSeries::constant(Rat(1), m) - RatSeries::variable(m);
  RatSeries geo = one_minus_t.inverse();
  for (std::size_t k = 0; k <= m; ++k) CHECK(geo[k] == 1);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (int trial = 0; trial < 20; ++trial) {
    RatSeries f(m);
    f[0] = 1;
    for (std::size_t k = 1; k <= m; ++k) f[k] = make_rat(num(rng), den(rng));
    CHECK(f.log().exp() == f);
    CHECK((f * f.inverse()) == RatSeries::constant(Rat(1), m));
    CHECK(f.sqrt() * f.sqrt() == f);
    RatSeries g = f - RatSeries::constant(Rat(1), m);
    if (g[1] != 0) CHECK(g.compose(g.reversion()) == RatSeries::variable(m));
  }

  CHECK_THROWS_AS(RatSeries::constant(Rat(2), 3).log(), Error);
  CHECK_THROWS_AS(RatSeries::constant(Rat(1), 3).exp(), Error);
  CHECK_THROWS_AS(RatSeries(3).inverse(), Error);
  CHECK_THROWS_AS(one_plus_t.compose(one_plus_t), Error);
}

TEST_CASE("monotone kappa coefficients") {
  auto a = monotone_kappa_coefficients(6);
  CHECK(a[0] == -3);
  CHECK(a[1] == Rat(-21, 2));
  CHECK(a[0] * a[0] / 2 - a[1] == 15);
  RatSeries s(6);
  for (std::size_t l = 1; l <= 6; ++l) s[l] = -a[l - 1];
  RatSeries e = s.exp();
  for (long k = 0; k <= 6; ++k) CHECK(e[k] == Rat(double_factorial(2 * k + 1)));
}

TEST_CASE("gaussian moments") {
  CHECK(gaussian_moment(0, 4)[0] == 1);
  CHECK(gaussian_moment(1, 4)[1] == 1);
  CHECK(gaussian_moment(3, 4)[3] == 15);
  CHECK(gaussian_moment_coefficient(5) == 0);
}

TEST_CASE("bigfloat basics") {
  PrecisionScope scope(256);
  BigFloat two(2L);
  BigFloat s = sqrt(two);
  CHECK(abs(s * s - two) < BigFloat::parse("1e-75"));
  BigFloat third(Rat(1, 3));
  BigFloat back = parse_annotated(third.to_annotated_string());
  CHECK(back == third);
  CHECK(back.precision() == 256);
  BigComplex j = unit_root(1, 3);
  BigComplex cube = pow(j, 3);
  CHECK(abs(cube - BigComplex(1)) < BigFloat::parse("1e-70"));
  CHECK_THROWS_AS(BigFloat::parse("abc"), Error);
}
