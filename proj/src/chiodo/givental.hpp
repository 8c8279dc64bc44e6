#pragma once

#include <vector>

#include "chiodo/chiodo.hpp"
#include "chiodo/taut.hpp"
#include "exact/series.hpp"

namespace elsv {

/// Flat label of -a in 1..r.
int opposite_label(int r, int a);

/// Diagonal (in the flat basis v_1..v_r) matrix series in zeta; entry a-1 is
/// the coefficient of v_a.
struct RMatrix {
  int r = 1;
  std::vector<RatSeries> diagonal;

  std::size_t order() const { return diagonal.empty() ? 0 : diagonal.front().order(); }
  const RatSeries& entry(int a) const { return diagonal.at(static_cast<std::size_t>(a - 1)); }
  RMatrix inverse() const;
};

/// R(zeta) with R_aa = exp(sum_l B_{l+1}(a/r)/(l(l+1)) (-zeta)^l).
RMatrix chiodo_r_matrix(int r, std::size_t order);

/// R(zeta) R*(-zeta) = Id exactly to the stored order, * the eta-adjoint.
bool satisfies_symplectic_condition(const RMatrix& R);

/// Degree-zero part of the theory on the flat basis.
struct TFTData {
  int r = 1;
  int s = 1;

  /// eta(v_a, v_b) = delta_{a+b = 0 mod r} / r.
  Rat pairing(int a, int b) const;
  /// Entry (a, b) of eta^{-1}.
  Rat inverse_pairing(int a, int b) const;
  /// r^{2g-1} delta_{sum a_i = s(2g-2+n) mod r}.
  Rat amplitude(int g, const std::vector<int>& labels) const;
};

/// eta(v_s . v_a, v_b) = eta(v_a, v_b) for all a, b.
bool flat_unit_check(int r, int s);

/// exp(sum c_l kappa_l) rebuilt from dilaton leaves carrying
/// u(1 - R^{-1}_{ss}(u)), pushed forward to kappa classes.
KappaPoly dilaton_kappa_polynomial(const RMatrix& R_inverse, int s, int max_degree);

/// The R-matrix action on the TFT, as a decorated stable-graph sum truncated
/// at max_degree (negative means 3g-3+n).
TautExpression givental_action(int g, int n, const ChiodoParams& p, int max_degree = -1);

}  // namespace elsv
