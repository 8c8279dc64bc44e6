#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "exact/bigfloat.hpp"
#include "hurwitz/partition.hpp"
#include "tr/spectral_curve.hpp"

namespace elsv {

struct TrOptions {
  unsigned precision_bits = kDefaultPrecisionBits;
  /// Initial quadrature nodes per branch point; doubled until stable.
  int nodes = 256;
  int max_nodes = 4096;
  /// Recompute at twice the precision and require agreement to 1e-20.
  bool check_precision = false;
  /// Cauchy extraction radius; defaults to half the smallest branch-point
  /// modulus (in t = 1/z for the monotone curve).
  std::optional<double> extraction_radius;
};

/// omega_{g,n} with its dz factors stripped, written as
///   sum c[i_1 k_1, ..., i_n k_n] prod_j (z_j - p_{i_j})^{-k_j},
/// 1 <= k_j <= max_pole. Index of (i, k) per variable is i * max_pole + k - 1.
struct PolarForm {
  int n = 0;
  int branch_count = 0;
  int max_pole = 0;
  std::vector<BigComplex> points;
  std::vector<BigComplex> coefficients;

  int dim() const { return branch_count * max_pole; }
  BigComplex evaluate(const std::vector<BigComplex>& z) const;
};

/// omega_{g,n} from the recursion (2g-2+n > 0), memoised per curve, precision
/// and quadrature settings.
std::shared_ptr<const PolarForm> correlator_polar_form(const SpectralCurve& curve, int g, int n,
                                                        const TrOptions& opts = {});

/// Coefficient function of omega_{g,n} at the given points; includes the
/// unstable cases omega_{0,1} = y dx and omega_{0,2} = B.
BigComplex omega(const SpectralCurve& curve, int g, int n, const std::vector<BigComplex>& points,
                 const TrOptions& opts = {});

void clear_correlator_cache();

struct CorrelatorCoefficient {
  std::string curve;
  int g = 0;
  Partition mu;
  /// Number of simple branch points b, when integral (S(r,s) and lambert).
  std::optional<long> branches;
  BigFloat value;
  BigFloat imaginary;
};

/// N_{g,mu} for all mu with n parts in 1..mu_max. For S(r,s) and lambert
///   omega = d...d sum N/b! e^{sum mu_j x_j},  b = ((2g-2+n)s + |mu|)/r,
/// and for the monotone curve omega = d...d sum N prod x_j^{mu_j}.
std::vector<CorrelatorCoefficient> extract_coefficients(const SpectralCurve& curve, int g, int n, int mu_max,
                                                        const TrOptions& opts = {});

}  // namespace elsv
