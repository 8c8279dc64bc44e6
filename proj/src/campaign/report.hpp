#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "campaign/config.hpp"

namespace elsv {

enum class Verdict { Pass, Fail, Error };

const char* verdict_name(Verdict v);
Verdict parse_verdict(const std::string& name);

struct CheckRow {
  std::string check;
  int g = 0;
  int r = 1;
  int s = 1;
  std::string mu;
  std::string lhs;
  std::string rhs;
  Verdict verdict = Verdict::Pass;
  /// Relative tolerance of a floating-point comparison; empty when exact.
  std::string tolerance;
  /// Error message for Verdict::Error rows.
  std::string detail;
  /// Wall time in seconds rounded to milliseconds; only recorded on request.
  std::optional<double> seconds;

  friend bool operator==(const CheckRow&, const CheckRow&) = default;
};

struct CheckReport {
  std::string campaign;
  unsigned precision = 256;
  std::size_t cache_hits = 0;
  std::size_t cache_entries = 0;
  std::vector<CheckRow> rows;

  std::size_t count(Verdict v) const;
  bool passed() const { return count(Verdict::Pass) == rows.size(); }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// CSV with header check,g,r,s,mu,lhs,rhs,verdict,seconds. Seconds print as
/// "-" unless a timing was recorded.
std::string emit_csv(const CheckReport& report);
/// Rows plus summary counts and environment. cache_hits depends on thread
/// interleaving and is only written when rows carry timings.
std::string emit_json(const CheckReport& report);
std::string emit_table(const CheckReport& report, ReportFormat format);
/// Inverse of emit_json; throws Parse.
CheckReport parse_report_json(const std::string& text);
/// Throws Io when the file cannot be written.
void write_table(const CheckReport& report, ReportFormat format, const std::string& path);

}  // namespace elsv
