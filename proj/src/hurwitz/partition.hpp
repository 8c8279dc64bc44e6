#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "exact/rational.hpp"

namespace elsv {

/// Integer partition with weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  /// Sorts the parts; throws InvalidArgument on a non-positive part.
  explicit Partition(std::vector<int> parts);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  /// Multiplicity of part i.
  int multiplicity(int i) const;
  /// prod_i m_i!, the symmetries permuting equal parts.
  BigInt aut_order() const;
  /// z_mu = prod_i i^{m_i} m_i!, the centralizer order in S_d.
  BigInt centralizer_order() const;
  /// Size of the conjugacy class of cycle type mu in S_d.
  BigInt class_size() const;
  /// Sum over cells of (column - row).
  long content_sum() const;
  /// Contents of all cells, row by row.
  std::vector<int> contents() const;
  /// Number of standard Young tableaux.
  BigInt dimension() const;

  /// "3,1,1"; the empty partition prints as "".
  std::string to_string() const;
  /// Inverse of to_string; also accepts whitespace and any part order.
  static Partition parse(std::string_view text);

  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of d in reverse lexicographic order.
std::vector<Partition> partitions_of(int d);

/// All distinct nonempty sub-multisets of mu's parts (mu itself included).
std::vector<Partition> sub_partitions(const Partition& mu);

/// Multiset difference mu minus nu; throws if nu is not contained in mu.
Partition partition_difference(const Partition& mu, const Partition& nu);

/// Multiset union.
Partition partition_union(const Partition& a, const Partition& b);

}  // namespace elsv
