#pragma once

#include <vector>

#include "exact/rational.hpp"
#include "exact/series.hpp"
#include "tr/spectral_curve.hpp"

namespace elsv {

/// b! r^{b+2g-2+n} / s^{2g-2+n} prod_i (mu_i/r)^{[mu_i]} / [mu_i]! times
/// int C_{g,n}(r,s; a) / prod_i (1 - mu_i psi_i / r), with [m] = floor(m/r)
/// and b = ((2g-2+n)s + |mu|)/r; 0 when b is not a non-negative integer.
/// Throws Unsupported for s = 0.
Rat closed_form_N(int g, const std::vector<int>& mu, int r, int s);

/// Square matrix of power series in zeta.
struct SeriesMatrix {
  std::size_t size = 0;
  std::vector<std::vector<ComplexSeries>> entries;

  const ComplexSeries& at(std::size_t i, std::size_t j) const { return entries.at(i).at(j); }
  std::size_t order() const { return entries.empty() ? 0 : entries[0][0].order(); }
};

/// R^{-1}(zeta) in the idempotent basis from the Laplace transform of B
/// between branch points, with the Gaussian moments taken termwise.
SeriesMatrix inverse_r_matrix_from_B(const SpectralCurve& curve, std::size_t order);

/// R(zeta) from B, converted to the flat basis v_a = sum_i J^{ai}/r e_i
/// (row a-1 is v_a); diagonal for S(r,s).
SeriesMatrix r_matrix_from_B(const SpectralCurve& curve, std::size_t order);

/// Flat-unit criterion for y, checked coefficientwise in zeta up to the given
/// order at tolerance 1e-30.
bool doss_test(const SpectralCurve& curve, std::size_t order);

/// Compares the closed-form series for xi_a on S(r,s) with the primitive of B
/// at the branch points (combined into the flat basis) coefficientwise in z up
/// to the given order, and checks (1/r) d/dx = -(1/w) d/dw on x~^mu in every
/// chart.
bool xi_function_check(int r, int s, int a, std::size_t order);

}  // namespace elsv
