#pragma once

#include <atomic>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "exact/rational.hpp"

namespace elsv {

/// (g; psi exponents; kappa exponents), both multisets kept sorted.
struct IntersectionKey {
  int g = 0;
  std::vector<int> psi;
  std::vector<int> kappa;

  IntersectionKey() = default;
  IntersectionKey(int genus, std::vector<int> psi_exponents, std::vector<int> kappa_exponents = {});

  int n() const { return static_cast<int>(psi.size()); }
  /// "g|d1,d2|k1,k2"
  std::string to_string() const;
  static IntersectionKey parse(std::string_view text);

  friend auto operator<=>(const IntersectionKey&, const IntersectionKey&) = default;
  friend bool operator==(const IntersectionKey&, const IntersectionKey&) = default;
};

struct CacheStats {
  std::size_t entries = 0;
  std::size_t hits = 0;
  std::size_t misses = 0;
  std::size_t loaded = 0;
};

/// Exact intersection numbers keyed by IntersectionKey. Any number of readers
/// may query concurrently; inserts take an exclusive lock. A key is written at
/// most once: re-inserting an equal value is a no-op, a different value is a
/// Consistency error.
class IntersectionCache {
 public:
  std::optional<Rat> find(const IntersectionKey& key) const;
  void insert(const IntersectionKey& key, const Rat& value);

  /// Merges entries from a file in "g|d..|k..=p/q" line format. Missing files
  /// are treated as empty. Parse errors name the offending line.
  void load(const std::filesystem::path& path);
  /// Writes all entries, one per line, in key order.
  void flush(const std::filesystem::path& path) const;
  std::string serialize() const;

  void clear();
  CacheStats stats() const;
  std::map<IntersectionKey, Rat> snapshot() const;

  static IntersectionCache& global();

 private:
  mutable std::shared_mutex mutex_;
  std::map<IntersectionKey, Rat> entries_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
  std::size_t loaded_ = 0;
};

}  // namespace elsv
