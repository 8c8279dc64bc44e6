#pragma once

#include <string>
#include <vector>

#include "exact/bigfloat.hpp"
#include "exact/rational.hpp"
#include "exact/series.hpp"

namespace elsv {

enum class CurveKind { Srs, Lambert, Monotone };

/// Spectral curve on the Riemann sphere with global coordinate z and
/// B = dz dz' / (z - z')^2.
///   S(r,s):   x = -z^r + log z,     y = z^s
///   lambert:  x = -z + log z,       y = z
///   monotone: x = (z - 1) / z^2,    y = -z
class SpectralCurve {
 public:
  /// Throws InvalidArgument unless 1 <= s <= r; s = 0 is Unsupported.
  static SpectralCurve srs(int r, int s);
  static SpectralCurve lambert();
  static SpectralCurve monotone();
  /// "S(r,s)", "lambert" or "monotone".
  static SpectralCurve parse(const std::string& id);

  /// Same curve with y replaced by y + z^{r+1}, which lies outside the span
  /// of z^1..z^r.
  SpectralCurve perturbed() const;

  CurveKind kind() const { return kind_; }
  int r() const { return r_; }
  int s() const { return s_; }
  bool is_perturbed() const { return perturbed_; }
  std::string name() const;

  /// Coefficients are read off at z = infinity in t = 1/z with x~ = x
  /// (monotone), otherwise at z = 0 with x~ = e^x = z e^{-z^r}.
  bool expands_at_infinity() const { return kind_ == CurveKind::Monotone; }

  std::vector<BigComplex> branch_points() const;
  std::size_t branch_count() const { return kind_ == CurveKind::Srs ? static_cast<std::size_t>(r_) : 1; }

  /// x(a) - x(b), with the logarithm taken on the principal branch of a/b.
  BigComplex x_difference(const BigComplex& a, const BigComplex& b) const;
  BigComplex dx(const BigComplex& z) const;
  BigComplex y(const BigComplex& z) const;

  /// x(p + u) - x(p) and y(p + u) as series in u.
  ComplexSeries x_series(const BigComplex& p, std::size_t order) const;
  ComplexSeries y_series(const BigComplex& p, std::size_t order) const;

  /// C_i^2 in x = (C_i w_i)^2 + x(p_i); -1/(2r) for S(r,s), -1/2 otherwise.
  Rat chart_constant_squared() const;
  /// dw/dz at the branch point p.
  BigComplex chart_slope(const BigComplex& p) const;
  /// C = r^{1+s/r}/s for S(r,s) and 1 for the other curves.
  BigFloat global_constant() const;

  /// Largest radius around the branch point with index i on which the local
  /// involution and the integrand of the recursion stay analytic, divided by 4.
  BigFloat residue_radius(std::size_t i) const;

 private:
  SpectralCurve(CurveKind kind, int r, int s) : kind_(kind), r_(r), s_(s) {}
  ComplexSeries shifted_variable(const BigComplex& p, std::size_t order) const;

  CurveKind kind_;
  int r_;
  int s_;
  bool perturbed_ = false;
};

/// Series data at one branch point p: z = p + u, w = w(u) the local
/// coordinate and u(w) its inverse, and the deck transformation
/// sigma(p + u) = p + sigma(u).
struct LocalChart {
  BigComplex point;
  ComplexSeries w_of_u;
  ComplexSeries u_of_w;
  ComplexSeries sigma;
};

/// Chart at branch point index i, series truncated at the given order.
LocalChart local_chart(const SpectralCurve& curve, std::size_t i, std::size_t order);

/// Evaluates a series at a point by Horner's rule.
BigComplex evaluate_series(const ComplexSeries& s, const BigComplex& u);

}  // namespace elsv
