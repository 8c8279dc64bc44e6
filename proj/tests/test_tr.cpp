#include "doctest.h"

#include "error.hpp"
#include "exact/special.hpp"
#include "hurwitz/hurwitz.hpp"
#include "tr/ingredients.hpp"
#include "tr/recursion.hpp"

using namespace elsv;

namespace {

bool near(const BigFloat& a, const BigFloat& b, const char* tol = "1e-20") {
  BigFloat scale = max(BigFloat(1L), max(abs(a), abs(b)));
  return abs(a - b) <= BigFloat::parse(tol) * scale;
}

bool near(const BigComplex& a, const BigComplex& b, const char* tol = "1e-30") {
  BigFloat scale = max(BigFloat(1L), max(abs(a), abs(b)));
  return abs(a - b) <= BigFloat::parse(tol) * scale;
}

Rat labelled_count(HurwitzFlavor flavor, int r, int g, const Partition& mu) {
  return Rat(mu.aut_order()) * count_connected(HurwitzQuery{flavor, r, g, mu});
}

// exp(-sum_k B_{k+1}(a/r) zeta^k / (k(k+1))), coefficients up to zeta^order.
RatSeries bernoulli_diagonal(int r, int a, std::size_t order) {
  RatSeries exponent(order);
  for (std::size_t k = 1; k <= order; ++k)
    exponent[k] = -bernoulli_polynomial(static_cast<unsigned>(k + 1), make_rat(a, r)) / Rat(static_cast<long>(k * (k + 1)));
  return exponent.exp();
}

}  // namespace

TEST_CASE("spectral curves and branch points") {
  PrecisionScope scope(256);
  auto s11 = SpectralCurve::parse("S(1,1)");
  CHECK(s11.branch_points().size() == 1);
  CHECK(near(s11.branch_points()[0], BigComplex(1)));
  auto s21 = SpectralCurve::parse("S(2, 1)");
  auto pts = s21.branch_points();
  REQUIRE(pts.size() == 2);
  for (const auto& p : pts) {
    CHECK(near(p * p, BigComplex(make_rat(1, 2))));
    CHECK(near(s21.dx(p), BigComplex(0)));
  }
  CHECK(near(SpectralCurve::monotone().dx(BigComplex(2)), BigComplex(0)));
  CHECK(near(SpectralCurve::lambert().dx(BigComplex(1)), BigComplex(0)));
  CHECK(SpectralCurve::parse("monotone").expands_at_infinity());
  CHECK_THROWS_AS(SpectralCurve::parse("S(2,x)"), Error);
  try {
    SpectralCurve::srs(2, 0);
    FAIL("expected Unsupported");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Unsupported);
  }
  CHECK_THROWS_AS(SpectralCurve::srs(2, 3), Error);
}

TEST_CASE("local involution") {
  PrecisionScope scope(256);
  auto chart = local_chart(SpectralCurve::srs(1, 1), 0, 8);
  // -z + log z is invariant: sigma(1+u) = 1 - u + 2/3 u^2 - 4/9 u^3 + ...
  CHECK(near(chart.sigma[1], BigComplex(-1)));
  CHECK(near(chart.sigma[2], BigComplex(make_rat(2, 3))));
  CHECK(near(chart.sigma[3], BigComplex(make_rat(-4, 9))));
  for (auto curve : {SpectralCurve::srs(1, 1), SpectralCurve::srs(3, 2), SpectralCurve::monotone()})
    for (std::size_t i = 0; i < curve.branch_count(); ++i) {
      auto c = local_chart(curve, i, 10);
      auto x = curve.x_series(c.point, 10);
      auto diff = x.compose(c.sigma) - x;
      auto twice = c.sigma.compose(c.sigma);
      for (std::size_t k = 0; k <= 10; ++k) {
        CHECK(near(diff[k], BigComplex(0)));
        CHECK(near(twice[k], BigComplex(k == 1 ? 1 : 0)));
      }
      // x = C^2 w^2 + x(p)
      auto w2 = c.w_of_u * c.w_of_u * BigComplex(curve.chart_constant_squared());
      for (std::size_t k = 0; k <= 10; ++k) CHECK(near(w2[k], x[k]));
    }
}

TEST_CASE("correlators are symmetric and match the cubic term") {
  PrecisionScope scope(256);
  auto curve = SpectralCurve::srs(2, 1);
  BigComplex a(BigFloat::parse("0.1"), BigFloat::parse("0.05")), b(BigFloat::parse("-0.2")),
      c(BigFloat::parse("0.03"), BigFloat::parse("-0.15"));
  CHECK(near(omega(curve, 0, 3, {a, b, c}), omega(curve, 0, 3, {c, a, b})));
  CHECK(near(omega(curve, 1, 2, {a, b}), omega(curve, 1, 2, {b, a})));
  // omega_{0,3} = sum_i prod_j (z_j - p_i)^{-2} / (x''(p_i) y'(p_i)) up to the
  // orientation sign of the kernel, here -1.
  BigComplex expected;
  for (const auto& p : curve.branch_points()) {
    BigComplex x2 = -BigComplex(1) / (p * p) - BigComplex(2);  // x'' for r = 2
    BigComplex y1(1);
    BigComplex prod = BigComplex(1) / (pow(a - p, 2) * pow(b - p, 2) * pow(c - p, 2));
    expected -= prod / (x2 * y1);
  }
  CHECK(near(omega(curve, 0, 3, {a, b, c}), expected));
  CHECK(near(omega(curve, 0, 2, {a, b}), BigComplex(1) / ((a - b) * (a - b))));
  CHECK_THROWS_AS(correlator_polar_form(curve, 0, 2), Error);
}

TEST_CASE("simple Hurwitz numbers from the Lambert curve") {
  for (auto curve : {SpectralCurve::srs(1, 1), SpectralCurve::lambert()})
    for (auto [g, n, mu_max] : {std::tuple{0, 3, 2}, std::tuple{1, 1, 4}, std::tuple{1, 2, 3}, std::tuple{0, 4, 1}})
      for (const auto& e : extract_coefficients(curve, g, n, mu_max)) {
        CAPTURE(curve.name());
        CAPTURE(g);
        CAPTURE(e.mu.to_string());
        CHECK(near(e.value, BigFloat(labelled_count(HurwitzFlavor::Simple, 1, g, e.mu))));
      }
  auto first = extract_coefficients(SpectralCurve::srs(1, 1), 0, 3, 1);
  CHECK(near(first.at(0).value, BigFloat(24L)));
  CHECK(*first.at(0).branches == 4);
}

TEST_CASE("monotone Hurwitz numbers from the monotone curve at infinity") {
  auto curve = SpectralCurve::monotone();
  for (auto [g, n, mu_max] : {std::tuple{0, 3, 2}, std::tuple{1, 1, 4}, std::tuple{1, 2, 3}})
    for (const auto& e : extract_coefficients(curve, g, n, mu_max)) {
      CAPTURE(g);
      CAPTURE(e.mu.to_string());
      CHECK(near(e.value, BigFloat(labelled_count(HurwitzFlavor::Monotone, 1, g, e.mu))));
    }
}

TEST_CASE("recursion agrees with the intersection-number formula") {
  for (auto [r, s] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}})
    for (auto [g, n] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{0, 3}}) {
      auto curve = SpectralCurve::srs(r, s);
      for (const auto& e : extract_coefficients(curve, g, n, n == 3 ? 2 : 4)) {
        CAPTURE(curve.name());
        CAPTURE(g);
        CAPTURE(e.mu.to_string());
        CHECK(near(e.value, BigFloat(closed_form_N(g, e.mu.parts, r, s))));
        CHECK(abs(e.imaginary) < BigFloat::parse("1e-40"));
      }
    }
  CHECK(closed_form_N(1, {2}, 1, 1) == make_rat(1, 2));
  CHECK(closed_form_N(1, {2}, 2, 2) == make_rat(1, 2));
  CHECK(closed_form_N(1, {2}, 2, 1) == 0);
  CHECK_THROWS_AS(closed_form_N(1, {2}, 2, 0), Error);
}

TEST_CASE("orbifold numbers from S(2,2)") {
  for (auto [g, n] : {std::pair{0, 3}, std::pair{1, 1}, std::pair{1, 2}})
    for (const auto& e : extract_coefficients(SpectralCurve::srs(2, 2), g, n, 4)) {
      if (e.mu.size() % 2 != 0) continue;
      CAPTURE(g);
      CAPTURE(e.mu.to_string());
      CHECK(near(e.value, BigFloat(labelled_count(HurwitzFlavor::Orbifold, 2, g, e.mu))));
    }
}

TEST_CASE("extraction precision and radius checks") {
  TrOptions opts;
  opts.check_precision = true;
  auto values = extract_coefficients(SpectralCurve::srs(2, 1), 1, 1, 3, opts);
  CHECK(values.size() == 3);
  TrOptions wide;
  wide.extraction_radius = 0.9;
  CHECK_THROWS_AS(extract_coefficients(SpectralCurve::srs(2, 1), 1, 1, 3, wide), Error);
  TrOptions narrow;
  narrow.extraction_radius = 0.2;
  auto same = extract_coefficients(SpectralCurve::srs(2, 1), 1, 1, 3, narrow);
  for (std::size_t i = 0; i < same.size(); ++i) CHECK(near(same[i].value, values[i].value));
}

TEST_CASE("R-matrix from B matches the Bernoulli diagonal") {
  PrecisionScope scope(256);
  for (int r = 1; r <= 3; ++r) {
    auto R = r_matrix_from_B(SpectralCurve::srs(r, 1), 4);
    for (int a = 1; a <= r; ++a) {
      RatSeries expected = bernoulli_diagonal(r, a, 4);
      for (std::size_t k = 0; k <= 4; ++k) {
        CAPTURE(r);
        CAPTURE(a);
        CAPTURE(k);
        CHECK(near(R.at(a - 1, a - 1)[k], BigComplex(expected[k])));
        for (int b = 1; b <= r; ++b)
          if (b != a) CHECK(near(R.at(a - 1, b - 1)[k], BigComplex(0)));
      }
    }
  }
  auto scalar = r_matrix_from_B(SpectralCurve::lambert(), 3);
  CHECK(near(scalar.at(0, 0)[1], BigComplex(make_rat(-1, 12))));
}

TEST_CASE("flat unit test on y") {
  PrecisionScope scope(256);
  for (int r = 1; r <= 3; ++r)
    for (int s : {1, r}) {
      CAPTURE(r);
      CAPTURE(s);
      CHECK(doss_test(SpectralCurve::srs(r, s), 3));
      CHECK_FALSE(doss_test(SpectralCurve::srs(r, s).perturbed(), 3));
    }
  CHECK(doss_test(SpectralCurve::srs(3, 2), 3));
}

TEST_CASE("auxiliary functions") {
  PrecisionScope scope(256);
  for (int r = 1; r <= 3; ++r)
    for (int a = 1; a <= r; ++a) CHECK(xi_function_check(r, 1, a, 8));
  CHECK_THROWS_AS(xi_function_check(2, 1, 3, 4), Error);
}
