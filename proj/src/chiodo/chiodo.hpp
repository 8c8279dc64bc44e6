#pragma once

#include <memory>
#include <vector>

#include "chiodo/taut.hpp"
#include "exact/rational.hpp"

namespace elsv {

struct ChiodoParams {
  int r = 1;
  int s = 1;
  std::vector<int> a;
};

/// Throws InvalidArgument on out-of-range r, s, a and Precondition when the
/// root-existence condition (2g-2+n)s = sum a_i mod r fails.
void validate_chiodo_params(int g, const ChiodoParams& p);

/// ch_l of the derived pushforward of the universal r-th root, normalised so
/// that the degree-one part of chiodo_class equals -r^{2g-1} ch_1.
TautExpression chern_character(int l, const ChiodoParams& p, int g, int n);

/// Chiodo class as a weighted stable-graph sum, truncated at total degree
/// max_degree (negative means 3g-3+n). Classes are memoised.
std::shared_ptr<const TautExpression> chiodo_class(int g, int n, const ChiodoParams& p, int max_degree = -1);

/// Stable graphs of (g, n) with at most max_edges edges, memoised.
std::shared_ptr<const std::vector<EnumeratedGraph>> cached_stable_graphs(int g, int n, int max_edges);

/// Leg insertions a_i = r - (mu_i mod r), with r when r divides mu_i.
std::vector<int> elsv_leg_weights(int r, const std::vector<int>& mu);

/// int C_{g,n}(r, s; a) / prod_j (1 - (mu_j/r) psi_j), or 0 when the root
/// condition fails for these a_i.
Rat chiodo_integral_elsv(int g, int r, int s, const std::vector<int>& mu);

/// Coefficients c_l (l = 1..max_l) of the vertex exponent sum_l c_l kappa_l.
std::vector<Rat> chiodo_vertex_coefficients(int r, int s, int max_l);
/// Leg series exp(sum_l (-1)^{l-1} B_{l+1}(a/r)/(l(l+1)) psi^l).
RatSeries chiodo_leg_series(int r, int a, int order);
/// (1 - exp(sum_l (-1)^{l-1} B_{l+1}(w/r)/(l(l+1)) (x^l - (-y)^l))) / (x + y).
Bivariate chiodo_edge_factor(int r, int w, int degree);

}  // namespace elsv
