#include "campaign/report.hpp"

#include <cstdio>
#include <fstream>

#include "error.hpp"
#include "json.hpp"

namespace elsv {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string seconds_text(const std::optional<double>& s) {
  if (!s) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", *s);
  return buf;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Error: return "error";
  }
  return "?";
}

Verdict parse_verdict(const std::string& name) {
  if (name == "pass") return Verdict::Pass;
  if (name == "fail") return Verdict::Fail;
  if (name == "error") return Verdict::Error;
  fail(ErrorCode::Parse, "unknown verdict '" + name + "'");
}

std::size_t CheckReport::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.verdict == v;
  return n;
}

std::string emit_csv(const CheckReport& report) {
  std::string out = "check,g,r,s,mu,lhs,rhs,verdict,seconds\n";
  for (const auto& row : report.rows) {
    out += csv_field(row.check) + "," + std::to_string(row.g) + "," + std::to_string(row.r) + "," +
           std::to_string(row.s) + "," + csv_field(row.mu) + "," + csv_field(row.lhs) + "," + csv_field(row.rhs) + "," +
           verdict_name(row.verdict) + "," + seconds_text(row.seconds) + "\n";
  }
  return out;
}

std::string emit_json(const CheckReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["campaign"] = report.campaign;
  bool timed = false;
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r;
    r["check"] = row.check;
    r["g"] = row.g;
    r["r"] = row.r;
    r["s"] = row.s;
    r["mu"] = row.mu;
    r["lhs"] = row.lhs;
    r["rhs"] = row.rhs;
    r["verdict"] = verdict_name(row.verdict);
    if (!row.tolerance.empty()) r["tolerance"] = row.tolerance;
    if (!row.detail.empty()) r["detail"] = row.detail;
    if (row.seconds) {
      r["seconds"] = seconds_text(row.seconds);
      timed = true;
    }
    rows.push_back(std::move(r));
  }
  j["summary"] = {{"rows", report.rows.size()},
                  {"passed", report.count(Verdict::Pass)},
                  {"failed", report.count(Verdict::Fail)},
                  {"errors", report.count(Verdict::Error)}};
  ordered_json env;
  env["precision"] = report.precision;
  env["cache_entries"] = report.cache_entries;
  if (timed) env["cache_hits"] = report.cache_hits;
  j["environment"] = env;
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

std::string emit_table(const CheckReport& report, ReportFormat format) {
  return format == ReportFormat::Csv ? emit_csv(report) : emit_json(report);
}

CheckReport parse_report_json(const std::string& text) {
  CheckReport report;
  try {
    auto j = nlohmann::json::parse(text);
    report.campaign = j.at("campaign").get<std::string>();
    const auto& env = j.at("environment");
    report.precision = env.at("precision").get<unsigned>();
    report.cache_entries = env.at("cache_entries").get<std::size_t>();
    report.cache_hits = env.value("cache_hits", std::size_t{0});
    for (const auto& r : j.at("rows")) {
      CheckRow row;
      row.check = r.at("check").get<std::string>();
      row.g = r.at("g").get<int>();
      row.r = r.at("r").get<int>();
      row.s = r.at("s").get<int>();
      row.mu = r.at("mu").get<std::string>();
      row.lhs = r.at("lhs").get<std::string>();
      row.rhs = r.at("rhs").get<std::string>();
      row.verdict = parse_verdict(r.at("verdict").get<std::string>());
      row.tolerance = r.value("tolerance", std::string());
      row.detail = r.value("detail", std::string());
      if (r.contains("seconds")) row.seconds = std::stod(r.at("seconds").get<std::string>());
      report.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("report json: ") + e.what());
  }
  return report;
}

void write_table(const CheckReport& report, ReportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out << emit_table(report, format);
  if (!out) fail(ErrorCode::Io, "write to '" + path + "' failed");
}

}  // namespace elsv
