#pragma once

#include <vector>

#include "exact/rational.hpp"
#include "intersection/cache.hpp"

namespace elsv {

/// Throws Unstable unless 2g - 2 + n > 0.
void require_stable(int g, int n);

/// <tau_{d_1} ... tau_{d_n}>_g over the moduli space of stable curves.
Rat psi_intersection(int g, const std::vector<int>& psi, IntersectionCache& cache = IntersectionCache::global());

/// int kappa_{b_1} ... kappa_{b_k} psi_1^{d_1} ... psi_n^{d_n}, reduced to pure
/// psi integrals by adding one marked point per kappa factor.
Rat kappa_psi_intersection(int g, const std::vector<int>& kappa, const std::vector<int>& psi,
                           IntersectionCache& cache = IntersectionCache::global());

}  // namespace elsv
