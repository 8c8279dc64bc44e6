#include "tr/ingredients.hpp"

#include "chiodo/chiodo.hpp"
#include "error.hpp"
#include "exact/special.hpp"

namespace elsv {

namespace {

bool close(const BigComplex& a, const BigComplex& b, const BigFloat& tol) {
  BigFloat scale = max(BigFloat(1L), max(abs(a), abs(b)));
  return abs(a - b) <= tol * scale;
}

BigFloat series_tolerance() { return BigFloat::parse("1e-30"); }

SeriesMatrix zero_matrix(std::size_t size, std::size_t order) {
  return SeriesMatrix{size, std::vector<std::vector<ComplexSeries>>(size, std::vector<ComplexSeries>(size, ComplexSeries(order)))};
}

SeriesMatrix multiply(const SeriesMatrix& a, const SeriesMatrix& b) {
  SeriesMatrix out = zero_matrix(a.size, a.order());
  for (std::size_t i = 0; i < a.size; ++i)
    for (std::size_t j = 0; j < a.size; ++j)
      for (std::size_t k = 0; k < a.size; ++k) out.entries[i][j] += a.at(i, k) * b.at(k, j);
  return out;
}

// Inverse of I + X with X = O(zeta): sum_k (-X)^k.
SeriesMatrix invert(const SeriesMatrix& m) {
  SeriesMatrix minus_x = m;
  for (std::size_t i = 0; i < m.size; ++i)
    for (std::size_t j = 0; j < m.size; ++j) {
      minus_x.entries[i][j] *= BigComplex(-1);
      if (i == j) minus_x.entries[i][j][0] += BigComplex(1);
    }
  SeriesMatrix out = zero_matrix(m.size, m.order());
  for (std::size_t i = 0; i < m.size; ++i) out.entries[i][i][0] = BigComplex(1);
  SeriesMatrix power = out;
  for (std::size_t k = 1; k <= m.order(); ++k) {
    power = multiply(power, minus_x);
    for (std::size_t i = 0; i < m.size; ++i)
      for (std::size_t j = 0; j < m.size; ++j) out.entries[i][j] += power.at(i, j);
  }
  return out;
}

std::size_t chart_order(std::size_t order) { return 2 * order + 6; }

}  // namespace

Rat closed_form_N(int g, const std::vector<int>& mu, int r, int s) {
  if (r < 1) fail(ErrorCode::InvalidArgument, "closed_form_N: r must be positive");
  if (s == 0) fail(ErrorCode::Unsupported, "closed_form_N: s = 0 has no correlator expansion");
  if (s < 0 || s > r) fail(ErrorCode::InvalidArgument, "closed_form_N: need 0 <= s <= r");
  const int n = static_cast<int>(mu.size());
  const int chi = 2 * g - 2 + n;
  if (g < 0 || n < 1 || chi <= 0) fail(ErrorCode::Unstable, "closed_form_N: unstable (g, n)");
  long numerator = static_cast<long>(chi) * s;
  for (int m : mu) {
    if (m < 1) fail(ErrorCode::InvalidArgument, "closed_form_N: parts must be positive");
    numerator += m;
  }
  if (numerator % r != 0) return 0;
  const long b = numerator / r;
  Rat out = Rat(factorial(static_cast<unsigned>(b))) * rat_pow(Rat(r), b + chi) / rat_pow(Rat(s), chi);
  for (int m : mu) {
    const int q = m / r;
    out *= rat_pow(make_rat(m, r), q) / Rat(factorial(static_cast<unsigned>(q)));
  }
  return out * chiodo_integral_elsv(g, r, s, mu);
}

SeriesMatrix inverse_r_matrix_from_B(const SpectralCurve& curve, std::size_t order) {
  const std::size_t nb = curve.branch_count();
  const std::size_t M = chart_order(order);
  std::vector<LocalChart> charts;
  for (std::size_t i = 0; i < nb; ++i) charts.push_back(local_chart(curve, i, M));

  SeriesMatrix out = zero_matrix(nb, order);
  for (std::size_t i = 0; i < nb; ++i) {
    const BigComplex slope_i = charts[i].u_of_w[1];  // dz/dw_i at w_i = 0
    for (std::size_t j = 0; j < nb; ++j) {
      const ComplexSeries& u = charts[j].u_of_w;
      ComplexSeries du = u.derivative();
      // Regular part of B(w_i, w_j)/(dw_i dw_j) at w_i = 0, as a series in w_j.
      ComplexSeries regular(M - 3);
      if (i == j) {
        ComplexSeries v(M - 1);
        for (std::size_t k = 0; k + 1 <= u.order() && k <= M - 1; ++k) v[k] = u[k + 1];
        ComplexSeries bracket = du.truncated(M - 1) * v.pow(-2) * slope_i;
        bracket[0] -= BigComplex(1);
        for (std::size_t k = 0; k <= M - 3; ++k) regular[k] = bracket.coeff(k + 2);
      } else {
        ComplexSeries gap = -u.truncated(M - 1);
        gap[0] += charts[i].point - charts[j].point;
        regular = (du * gap.pow(-2) * slope_i).truncated(M - 3);
      }
      ComplexSeries& entry = out.entries[i][j];
      if (i == j) entry[0] = BigComplex(1);
      for (std::size_t k = 0; k + 1 <= order; ++k)
        entry[k + 1] = -regular.coeff(2 * k) * BigComplex(gaussian_moment_coefficient(static_cast<unsigned>(2 * k)));
    }
  }
  return out;
}

SeriesMatrix r_matrix_from_B(const SpectralCurve& curve, std::size_t order) {
  SeriesMatrix R = invert(inverse_r_matrix_from_B(curve, order));
  const std::size_t r = R.size;
  SeriesMatrix flat = zero_matrix(r, order);
  const long rl = static_cast<long>(r);
  for (std::size_t a = 1; a <= r; ++a)
    for (std::size_t b = 1; b <= r; ++b) {
      ComplexSeries& e = flat.entries[a - 1][b - 1];
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          // (P^{-1})_{a i} R_{ij} P_{j b} with P_{jb} = J^{bj}/r, (P^{-1})_{ai} = J^{-ai}.
          BigComplex w = unit_root(-static_cast<long>(a * i) + static_cast<long>(b * j), rl) / BigComplex(rl);
          e += R.at(i, j) * w;
        }
    }
  return flat;
}

bool doss_test(const SpectralCurve& curve, std::size_t order) {
  const std::size_t nb = curve.branch_count();
  const std::size_t M = chart_order(order);
  SeriesMatrix Rinv = inverse_r_matrix_from_B(curve, order);
  std::vector<ComplexSeries> dy;
  for (std::size_t i = 0; i < nb; ++i) {
    LocalChart chart = local_chart(curve, i, M);
    ComplexSeries y = curve.y_series(chart.point, M);
    y[0] = BigComplex(0);
    dy.push_back(y.compose(chart.u_of_w).derivative());
  }
  // sum_k (R^{-1})^i_k dy/dw_k(0): the upper index is the integrated slot. The
  // factors 2 C_i^2 C agree for all i and cancel.
  const BigFloat tol = series_tolerance();
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t k = 0; k <= order; ++k) {
      BigComplex lhs = dy[i].coeff(2 * k) * BigComplex(gaussian_moment_coefficient(static_cast<unsigned>(2 * k)));
      BigComplex rhs;
      for (std::size_t j = 0; j < nb; ++j) rhs += Rinv.at(j, i).coeff(k) * dy[j][0];
      if (!close(lhs, rhs, tol)) return false;
    }
  return true;
}

bool xi_function_check(int r, int s, int a, std::size_t order) {
  if (a < 1 || a > r) fail(ErrorCode::InvalidArgument, "xi_function_check: need 1 <= a <= r");
  SpectralCurve curve = SpectralCurve::srs(r, s);
  const auto points = curve.branch_points();
  const BigFloat tol = series_tolerance();
  const BigFloat prefactor = pow(root(BigFloat(static_cast<long>(r)), static_cast<unsigned long>(r)), r - a);

  for (std::size_t m = 1; m <= order; ++m) {
    // Closed form: r^{(r-a)/r} sum_n (nr+r-a)^n/n! z^E e^{-E z^r}, E = nr+r-a.
    Rat closed = 0;
    for (long n = 0;; ++n) {
      const long E = n * r + r - a;
      if (E > static_cast<long>(m)) break;
      if ((static_cast<long>(m) - E) % r != 0) continue;
      const long k = (static_cast<long>(m) - E) / r;
      closed += rat_pow(Rat(E), n) / Rat(factorial(static_cast<unsigned>(n))) * rat_pow(Rat(-E), k) /
                Rat(factorial(static_cast<unsigned>(k)));
    }
    // sum_i J^{-ai} (dz/dw_i)(0) / (p_i - z), coefficient of z^m.
    BigComplex from_b;
    for (std::size_t i = 0; i < points.size(); ++i) {
      BigComplex slope = BigComplex(1) / curve.chart_slope(points[i]);
      from_b += unit_root(-static_cast<long>(a) * static_cast<long>(i), r) * slope * pow(points[i], -static_cast<long>(m) - 1);
    }
    if (!close(BigComplex(prefactor) * BigComplex(closed), from_b, tol)) return false;
  }

  const std::size_t M = order + 2;
  for (std::size_t i = 0; i < points.size(); ++i) {
    LocalChart chart = local_chart(curve, i, M);
    ComplexSeries z = ComplexSeries::variable(M);
    z[0] = chart.point;
    for (int mu = 1; mu <= 3; ++mu) {
      ComplexSeries f = z.pow(mu) * (z.pow(r) * BigComplex(-mu)).exp();
      ComplexSeries shifted = f;
      shifted[0] = BigComplex(0);
      ComplexSeries fw = shifted.compose(chart.u_of_w);
      fw[0] = f[0];
      ComplexSeries df = fw.derivative();
      if (!close(df[0], BigComplex(0), tol)) return false;
      for (std::size_t k = 0; k + 1 < M; ++k) {
        BigComplex lhs = -df.coeff(k + 1);
        BigComplex rhs = fw.coeff(k) * BigComplex(make_rat(mu, r));
        if (!close(lhs, rhs, tol)) return false;
      }
    }
  }
  return true;
}

}  // namespace elsv
