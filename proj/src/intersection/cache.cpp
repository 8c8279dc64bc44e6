#include "intersection/cache.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <mutex>
#include <sstream>

#include "error.hpp"

namespace elsv {

IntersectionKey::IntersectionKey(int genus, std::vector<int> psi_exponents, std::vector<int> kappa_exponents)
    : g(genus), psi(std::move(psi_exponents)), kappa(std::move(kappa_exponents)) {
  std::sort(psi.begin(), psi.end());
  std::sort(kappa.begin(), kappa.end());
}

namespace {

void append_list(std::string& out, const std::vector<int>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
}

int parse_nonneg(std::string_view text, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v < 0)
    fail(ErrorCode::Parse, "invalid intersection key '" + std::string(whole) + "'");
  return v;
}

std::vector<int> parse_list(std::string_view text, std::string_view whole) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_nonneg(text.substr(start, comma - start), whole));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string IntersectionKey::to_string() const {
  std::string out = std::to_string(g) + "|";
  append_list(out, psi);
  out += '|';
  append_list(out, kappa);
  return out;
}

IntersectionKey IntersectionKey::parse(std::string_view text) {
  auto bar1 = text.find('|');
  auto bar2 = bar1 == std::string_view::npos ? bar1 : text.find('|', bar1 + 1);
  if (bar2 == std::string_view::npos) fail(ErrorCode::Parse, "invalid intersection key '" + std::string(text) + "'");
  int g = parse_nonneg(text.substr(0, bar1), text);
  return IntersectionKey(g, parse_list(text.substr(bar1 + 1, bar2 - bar1 - 1), text),
                         parse_list(text.substr(bar2 + 1), text));
}

std::optional<Rat> IntersectionCache::find(const IntersectionKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void IntersectionCache::insert(const IntersectionKey& key, const Rat& value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(key, value);
  if (!inserted && it->second != value)
    fail(ErrorCode::Consistency, "cache entry " + key.to_string() + " already holds " + to_pq_string(it->second) +
                                     ", refusing " + to_pq_string(value));
}

void IntersectionCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    if (!std::filesystem::exists(path)) return;
    fail(ErrorCode::Io, "cannot read cache file " + path.string());
  }
  // Parse everything first so a malformed file leaves the cache untouched.
  std::vector<std::pair<IntersectionKey, Rat>> parsed;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    try {
      if (eq == std::string::npos) fail(ErrorCode::Parse, "missing '='");
      parsed.emplace_back(IntersectionKey::parse(std::string_view(line).substr(0, eq)),
                          parse_rat(std::string_view(line).substr(eq + 1)));
    } catch (const Error& e) {
      fail(ErrorCode::Parse, path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (in.bad()) fail(ErrorCode::Io, "error reading cache file " + path.string());
  for (const auto& [k, v] : parsed) insert(k, v);
  std::unique_lock lock(mutex_);
  loaded_ += parsed.size();
}

std::string IntersectionCache::serialize() const {
  std::shared_lock lock(mutex_);
  std::string out;
  for (const auto& [k, v] : entries_) {
    out += k.to_string();
    out += '=';
    out += to_pq_string(v);
    out += '\n';
  }
  return out;
}

void IntersectionCache::flush(const std::filesystem::path& path) const {
  std::string text = serialize();
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::Io, "cannot write cache file " + tmp.string());
    out << text;
    if (!out) fail(ErrorCode::Io, "error writing cache file " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail(ErrorCode::Io, "cannot replace cache file " + path.string() + ": " + ec.message());
}

void IntersectionCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
  hits_ = 0;
  misses_ = 0;
  loaded_ = 0;
}

CacheStats IntersectionCache::stats() const {
  std::shared_lock lock(mutex_);
  return {entries_.size(), hits_.load(), misses_.load(), loaded_};
}

std::map<IntersectionKey, Rat> IntersectionCache::snapshot() const {
  std::shared_lock lock(mutex_);
  return entries_;
}

IntersectionCache& IntersectionCache::global() {
  static IntersectionCache cache;
  return cache;
}

}  // namespace elsv
