#pragma once

#include <optional>
#include <string>
#include <vector>

namespace elsv {

enum class CheckId { Elsv, MonotoneElsv, Jpt, RspinRhs, TrEquivalence, Mumford, GiventalConsistency, Doss, Table, All };

const char* check_name(CheckId id);
/// Inverse of check_name; throws Parse.
CheckId parse_check(const std::string& name);
/// Every check except All, in suite order.
const std::vector<CheckId>& all_checks();

enum class ReportFormat { Csv, Json };

/// Campaign description. Unset ranges fall back to per-check defaults (the
/// acceptance ranges, or wider ones with `extended`).
struct CampaignConfig {
  CheckId check = CheckId::Elsv;
  std::optional<int> g_max;
  std::optional<int> d_max;
  std::optional<int> mu_max;
  std::vector<int> r_values;
  /// Tokens are integers, "r", or "all" for 0..r, e.g. {"1", "r"}.
  std::vector<std::string> s_rule;
  unsigned precision = 256;
  std::string cache_path;
  std::string out_path;
  ReportFormat format = ReportFormat::Csv;
  bool fail_fast = false;
  bool extended = false;
  bool timing = false;
  unsigned threads = 1;

  /// Sets one key from its text form; throws Parse on unknown keys or bad
  /// values and InvalidArgument when a value is out of range.
  void set(const std::string& key, const std::string& value);
  /// Applies "key = value" lines on top of the current values; blank lines
  /// and lines starting with # are ignored.
  void merge(const std::string& text);
  void merge_file(const std::string& path);
  static CampaignConfig parse(const std::string& text);
  /// Every key in a fixed order, so parse(serialize()) == *this.
  std::string serialize() const;

  /// s values for a given r under s_rule (or the fallback when unset).
  std::vector<int> s_values(int r, const std::vector<std::string>& fallback) const;

  friend bool operator==(const CampaignConfig&, const CampaignConfig&) = default;
};

}  // namespace elsv
