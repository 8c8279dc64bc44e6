#include "campaign/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace elsv {

namespace {

constexpr std::pair<CheckId, const char*> kChecks[] = {
    {CheckId::Elsv, "elsv"},
    {CheckId::MonotoneElsv, "monotone-elsv"},
    {CheckId::Jpt, "jpt"},
    {CheckId::RspinRhs, "rspin-rhs"},
    {CheckId::TrEquivalence, "tr-equivalence"},
    {CheckId::Mumford, "mumford"},
    {CheckId::GiventalConsistency, "givental-consistency"},
    {CheckId::Doss, "doss"},
    {CheckId::Table, "table"},
    {CheckId::All, "all"},
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& key, const std::string& text) {
  int v = 0;
  auto t = trim(text);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    fail(ErrorCode::Parse, "config: " + key + " expects an integer, got '" + text + "'");
  return v;
}

int bounded(const std::string& key, const std::string& text, int lo, int hi) {
  int v = parse_int(key, text);
  if (v < lo || v > hi)
    fail(ErrorCode::InvalidArgument,
         "config: " + key + " = " + std::to_string(v) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  auto t = trim(text);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  fail(ErrorCode::Parse, "config: " + key + " expects true or false, got '" + text + "'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    if constexpr (std::is_same_v<T, std::string>)
      out += xs[i];
    else
      out += std::to_string(xs[i]);
  }
  return out;
}

std::string optional_text(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

const char* check_name(CheckId id) {
  for (auto [c, name] : kChecks)
    if (c == id) return name;
  return "?";
}

CheckId parse_check(const std::string& name) {
  for (auto [c, n] : kChecks)
    if (name == n) return c;
  fail(ErrorCode::Parse, "unknown check id '" + name + "'");
}

const std::vector<CheckId>& all_checks() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> out;
    for (auto [c, n] : kChecks)
      if (c != CheckId::All) out.push_back(c);
    return out;
  }();
  return ids;
}

void CampaignConfig::set(const std::string& raw_key, const std::string& raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw_value);
  if (key == "check") {
    check = parse_check(value);
  } else if (key == "g_max") {
    g_max = value.empty() ? std::nullopt : std::optional<int>(bounded(key, value, 0, 3));
  } else if (key == "d_max") {
    d_max = value.empty() ? std::nullopt : std::optional<int>(bounded(key, value, 1, 8));
  } else if (key == "mu_max") {
    mu_max = value.empty() ? std::nullopt : std::optional<int>(bounded(key, value, 1, 6));
  } else if (key == "r") {
    r_values.clear();
    for (const auto& item : split_list(value)) r_values.push_back(bounded(key, item, 1, 6));
  } else if (key == "s") {
    s_rule.clear();
    for (const auto& item : split_list(value)) {
      if (item != "r" && item != "all") bounded(key, item, 0, 6);
      s_rule.push_back(item);
    }
  } else if (key == "precision") {
    precision = static_cast<unsigned>(bounded(key, value, 64, 4096));
  } else if (key == "cache") {
    cache_path = value;
  } else if (key == "out") {
    out_path = value;
  } else if (key == "format") {
    if (value == "csv")
      format = ReportFormat::Csv;
    else if (value == "json")
      format = ReportFormat::Json;
    else
      fail(ErrorCode::Parse, "config: format must be csv or json, got '" + value + "'");
  } else if (key == "fail_fast") {
    fail_fast = parse_bool(key, value);
  } else if (key == "extended") {
    extended = parse_bool(key, value);
  } else if (key == "timing") {
    timing = parse_bool(key, value);
  } else if (key == "threads") {
    threads = static_cast<unsigned>(bounded(key, value, 1, 64));
  } else {
    fail(ErrorCode::Parse, "config: unknown key '" + key + "'");
  }
}

void CampaignConfig::merge(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::Parse, "config line " + std::to_string(lineno) + ": expected key = value");
    set(t.substr(0, eq), t.substr(eq + 1));
  }
}

CampaignConfig CampaignConfig::parse(const std::string& text) {
  CampaignConfig cfg;
  cfg.merge(text);
  return cfg;
}

void CampaignConfig::merge_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  merge(ss.str());
}

std::string CampaignConfig::serialize() const {
  std::ostringstream out;
  out << "check = " << check_name(check) << "\n";
  out << "g_max = " << optional_text(g_max) << "\n";
  out << "d_max = " << optional_text(d_max) << "\n";
  out << "mu_max = " << optional_text(mu_max) << "\n";
  out << "r = " << join(r_values) << "\n";
  out << "s = " << join(s_rule) << "\n";
  out << "precision = " << precision << "\n";
  out << "cache = " << cache_path << "\n";
  out << "out = " << out_path << "\n";
  out << "format = " << (format == ReportFormat::Csv ? "csv" : "json") << "\n";
  out << "fail_fast = " << (fail_fast ? "true" : "false") << "\n";
  out << "extended = " << (extended ? "true" : "false") << "\n";
  out << "timing = " << (timing ? "true" : "false") << "\n";
  out << "threads = " << threads << "\n";
  return out.str();
}

std::vector<int> CampaignConfig::s_values(int r, const std::vector<std::string>& fallback) const {
  const auto& rule = s_rule.empty() ? fallback : s_rule;
  std::vector<int> out;
  auto add = [&](int s) {
    if (s <= r && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  for (const auto& token : rule) {
    if (token == "all")
      for (int s = 0; s <= r; ++s) add(s);
    else
      add(token == "r" ? r : parse_int("s", token));
  }
  return out;
}

}  // namespace elsv
