#pragma once

#include <vector>

#include "campaign/config.hpp"
#include "campaign/report.hpp"
#include "exact/rational.hpp"

namespace elsv {

/// Runs every case of cfg.check on a pool of cfg.threads workers. Rows come
/// back in enumeration order (genus, then partition, then r and s) whatever
/// the completion order. Module errors become rows with Verdict::Error; with
/// fail_fast the report stops after the first case that did not pass.
/// CheckId::All runs the whole suite in one pool.
/// Loads and flushes the intersection cache at cfg.cache_path when set.
CheckReport run_campaign(const CampaignConfig& cfg);

/// prod_i C(2 mu_i, mu_i) int exp(sum_l A_l kappa_l)
///   prod_i sum_d psi_i^d (2(mu_i + d) - 1)!! / (2 mu_i - 1)!!.
Rat monotone_elsv_rhs(int g, const std::vector<int>& mu);

/// prod_i mu_i^{mu_i}/mu_i! int C_{g,n}(1,1;1..1) / prod_i (1 - mu_i psi_i), which
/// is h_{g,mu}/b! for connected simple Hurwitz numbers.
Rat simple_elsv_rhs(int g, const std::vector<int>& mu);

}  // namespace elsv
