#pragma once

#include <vector>

#include "exact/rational.hpp"
#include "exact/series.hpp"

namespace elsv {

/// Coefficients of the Bernoulli polynomial B_l(x) in increasing powers of x.
const std::vector<Rat>& bernoulli_polynomial_coefficients(unsigned l);

/// B_l(x), with sum_l B_l(x) t^l / l! = t e^{xt} / (e^t - 1).
Rat bernoulli_polynomial(unsigned l, const Rat& x);

/// A_1..A_L with exp(-sum A_l U^l) = sum_k (2k+1)!! U^k.
std::vector<Rat> monotone_kappa_coefficients(unsigned count);

/// Formal Gaussian moment (1/sqrt(2 pi zeta)) int w^m e^{-w^2/2zeta} dw as a
/// monomial coefficient: returns (m-1)!! for even m and 0 for odd m; the
/// power of zeta is m/2.
Rat gaussian_moment_coefficient(unsigned m);

/// The k-th even moment (2k-1)!! zeta^k as a series in zeta of the given order.
RatSeries gaussian_moment(unsigned k, std::size_t order);

}  // namespace elsv
