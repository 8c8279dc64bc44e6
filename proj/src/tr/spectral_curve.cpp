#include "tr/spectral_curve.hpp"

#include <regex>

#include "error.hpp"

namespace elsv {

SpectralCurve SpectralCurve::srs(int r, int s) {
  if (r < 1) fail(ErrorCode::InvalidArgument, "S(r,s): r must be positive");
  if (s == 0) fail(ErrorCode::Unsupported, "S(r,0): y is constant and the recursion is undefined");
  if (s < 0 || s > r) fail(ErrorCode::InvalidArgument, "S(r,s): need 0 <= s <= r");
  return SpectralCurve(CurveKind::Srs, r, s);
}

SpectralCurve SpectralCurve::lambert() { return SpectralCurve(CurveKind::Lambert, 1, 1); }

SpectralCurve SpectralCurve::monotone() { return SpectralCurve(CurveKind::Monotone, 1, 1); }

SpectralCurve SpectralCurve::parse(const std::string& id) {
  if (id == "lambert") return lambert();
  if (id == "monotone") return monotone();
  static const std::regex pattern(R"(\s*S\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(id, m, pattern))
    fail(ErrorCode::Parse, "unknown spectral curve '" + id + "' (expected S(r,s), lambert or monotone)");
  return srs(std::stoi(m[1]), std::stoi(m[2]));
}

SpectralCurve SpectralCurve::perturbed() const {
  SpectralCurve c = *this;
  c.perturbed_ = true;
  return c;
}

std::string SpectralCurve::name() const {
  std::string base;
  switch (kind_) {
    case CurveKind::Srs: base = "S(" + std::to_string(r_) + "," + std::to_string(s_) + ")"; break;
    case CurveKind::Lambert: base = "lambert"; break;
    case CurveKind::Monotone: base = "monotone"; break;
  }
  return perturbed_ ? base + "+perturbed" : base;
}

std::vector<BigComplex> SpectralCurve::branch_points() const {
  if (kind_ == CurveKind::Monotone) return {BigComplex(2)};
  if (kind_ == CurveKind::Lambert) return {BigComplex(1)};
  // z^r = 1/r
  BigFloat modulus = BigFloat(1L) / root(BigFloat(static_cast<long>(r_)), static_cast<unsigned long>(r_));
  std::vector<BigComplex> out;
  for (int k = 0; k < r_; ++k) out.push_back(BigComplex(modulus) * unit_root(k, r_));
  return out;
}

BigComplex SpectralCurve::x_difference(const BigComplex& a, const BigComplex& b) const {
  if (kind_ == CurveKind::Monotone) {
    BigComplex one(1);
    return (a - one) / (a * a) - (b - one) / (b * b);
  }
  return pow(b, r_) - pow(a, r_) + log(a / b);
}

BigComplex SpectralCurve::dx(const BigComplex& z) const {
  if (kind_ == CurveKind::Monotone) return (BigComplex(2) - z) / pow(z, 3);
  return BigComplex(1) / z - BigComplex(r_) * pow(z, r_ - 1);
}

BigComplex SpectralCurve::y(const BigComplex& z) const {
  if (kind_ == CurveKind::Monotone) {
    BigComplex out = -z;
    if (perturbed_) out += z * z;
    return out;
  }
  BigComplex out = pow(z, s_);
  if (perturbed_) out += pow(z, r_ + 1);
  return out;
}

ComplexSeries SpectralCurve::shifted_variable(const BigComplex& p, std::size_t order) const {
  ComplexSeries z = ComplexSeries::variable(order);
  z[0] = p;
  return z;
}

ComplexSeries SpectralCurve::x_series(const BigComplex& p, std::size_t order) const {
  if (order == 0) return ComplexSeries(0);
  ComplexSeries z = shifted_variable(p, order - 1);
  ComplexSeries slope(order - 1);
  if (kind_ == CurveKind::Monotone) {
    slope = (ComplexSeries::constant(BigComplex(2), order - 1) - z) * z.pow(-3);
  } else {
    slope = z.inverse() - z.pow(r_ - 1) * BigComplex(r_);
  }
  return slope.integral();
}

ComplexSeries SpectralCurve::y_series(const BigComplex& p, std::size_t order) const {
  ComplexSeries z = shifted_variable(p, order);
  if (kind_ == CurveKind::Monotone) {
    ComplexSeries out = -z;
    if (perturbed_) out += z * z;
    return out;
  }
  ComplexSeries out = z.pow(s_);
  if (perturbed_) out += z.pow(r_ + 1);
  return out;
}

Rat SpectralCurve::chart_constant_squared() const {
  return make_rat(-1, 2 * (kind_ == CurveKind::Srs ? r_ : 1));
}

BigComplex SpectralCurve::chart_slope(const BigComplex& p) const {
  if (kind_ != CurveKind::Monotone) return BigComplex(r_) / p;
  ComplexSeries x = x_series(p, 2);
  return sqrt(x[2] / BigComplex(chart_constant_squared()));
}

BigFloat SpectralCurve::global_constant() const {
  if (kind_ != CurveKind::Srs) return BigFloat(1L);
  // r^{1+s/r} / s
  BigFloat rr(static_cast<long>(r_));
  return rr * pow(root(rr, static_cast<unsigned long>(r_)), s_) / BigFloat(static_cast<long>(s_));
}

BigFloat SpectralCurve::residue_radius(std::size_t i) const {
  auto points = branch_points();
  const BigComplex& p = points.at(i);
  // Singular points of x (z = 0) and, for the monotone curve, the point
  // z = 1 whose deck image is z = infinity.
  BigFloat nearest = abs(p);
  if (kind_ == CurveKind::Monotone) {
    BigFloat to_one = abs(p - BigComplex(1));
    if (to_one < nearest) nearest = to_one;
  }
  for (std::size_t j = 0; j < points.size(); ++j)
    if (j != i) {
      BigFloat d = abs(p - points[j]);
      if (d < nearest) nearest = d;
    }
  return nearest / BigFloat(4L);
}

LocalChart local_chart(const SpectralCurve& curve, std::size_t i, std::size_t order) {
  if (order < 2) fail(ErrorCode::InvalidArgument, "local_chart: order must be at least 2");
  LocalChart chart;
  chart.point = curve.branch_points().at(i);
  ComplexSeries x = curve.x_series(chart.point, order + 2);
  if (x[2].is_zero()) fail(ErrorCode::Precondition, "local_chart: branch point is not simple");
  // x(p+u) - x(p) = x_2 u^2 q(u) with q(0) = 1, so w = slope * u * sqrt(q).
  ComplexSeries q(order);
  for (std::size_t k = 0; k <= order; ++k) q[k] = x[k + 2] / x[2];
  ComplexSeries root_q = q.sqrt();
  BigComplex slope = curve.chart_slope(chart.point);
  chart.w_of_u = ComplexSeries(order + 1);
  for (std::size_t k = 0; k <= order; ++k) chart.w_of_u[k + 1] = slope * root_q[k];
  chart.u_of_w = chart.w_of_u.reversion();
  chart.sigma = chart.u_of_w.compose(-chart.w_of_u).truncated(order);
  return chart;
}

BigComplex evaluate_series(const ComplexSeries& s, const BigComplex& u) {
  BigComplex acc;
  for (std::size_t k = s.order() + 1; k-- > 0;) acc = acc * u + s[k];
  return acc;
}

}  // namespace elsv
