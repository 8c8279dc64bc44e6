#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exact/rational.hpp"
#include "hurwitz/partition.hpp"

namespace elsv {

enum class HurwitzFlavor { Simple, Monotone, Orbifold };

const char* flavor_name(HurwitzFlavor flavor);
/// "simple", "monotone", "orbifold"; throws Parse otherwise.
HurwitzFlavor parse_flavor(const std::string& name);

struct HurwitzQuery {
  HurwitzFlavor flavor = HurwitzFlavor::Simple;
  int r = 1;  // orbifold only
  int g = 0;
  Partition mu;
};

/// Number of simple branch points from Riemann-Hurwitz, or nullopt when it
/// is negative or fractional (the count is then 0).
std::optional<int> branch_count(const HurwitzQuery& q);

/// Search limits for the symmetric-group enumeration.
struct HurwitzLimits {
  int max_brute_degree = 7;
  int max_brute_branch = 10;
  int max_degree = 14;
};
HurwitzLimits& hurwitz_limits();

/// Connected count (1/d!) #{(sigma_0, [sigma_inf,] tau_1..tau_b) : tau_b...tau_1
/// sigma_0 sigma_inf = id, group transitive}, via characters and the
/// exponential formula.
Rat count_connected(const HurwitzQuery& q);

/// The same count by enumerating factorizations directly.
Rat count_connected_bruteforce(const HurwitzQuery& q);
/// Disconnected (no transitivity requirement) count by enumeration.
Rat count_disconnected_bruteforce(const HurwitzQuery& q);
/// Disconnected count by the Frobenius character formula.
Rat count_disconnected_frobenius(const HurwitzQuery& q);

/// Counts keyed by (mu, b). Simple and orbifold numbers are exponential in the
/// branch points (weight u^b/b!), monotone ones ordinary (weight u^b).
struct HurwitzKey {
  Partition mu;
  int b = 0;
  friend auto operator<=>(const HurwitzKey&, const HurwitzKey&) = default;
};

struct HurwitzTable {
  bool exponential_branch_weight = true;
  std::map<HurwitzKey, Rat> entries;
};

/// Logarithm of the generating series. Throws MissingEntry when some key
/// (nu, b') with nu a proper nonempty sub-multiset of mu and b' <= b is absent.
HurwitzTable connected_from_disconnected(const HurwitzTable& disconnected);
/// Exponential of the generating series; same closure requirement.
HurwitzTable disconnected_from_connected(const HurwitzTable& connected);

/// Disconnected Frobenius counts for every sub-key of (mu, b), closed as the
/// converters require.
HurwitzTable frobenius_disconnected_table(HurwitzFlavor flavor, int r, const Partition& mu, int b);

}  // namespace elsv
