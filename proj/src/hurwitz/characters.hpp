#pragma once

#include <vector>

#include "exact/rational.hpp"
#include "hurwitz/partition.hpp"

namespace elsv {

/// Irreducible character chi^lambda evaluated on the class of cycle type mu,
/// by the Murnaghan-Nakayama rule. Memoised.
BigInt character(const Partition& lambda, const Partition& mu);

/// Rows and columns indexed by partitions_of(d).
struct CharacterTable {
  int d = 0;
  std::vector<Partition> partitions;
  std::vector<std::vector<BigInt>> values;  // values[lambda][mu]
};

/// Computed once per d.
const CharacterTable& character_table(int d);

/// Central character |C_mu| chi^lambda(mu) / dim lambda.
Rat central_character(const Partition& lambda, const Partition& mu);

}  // namespace elsv
