#include "elsvkit/elsvkit.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <sstream>
#include <string>

#include "campaign/campaign.hpp"
#include "chiodo/chiodo.hpp"
#include "error.hpp"
#include "hurwitz/hurwitz.hpp"
#include "intersection/intersection.hpp"
#include "tr/ingredients.hpp"
#include "tr/recursion.hpp"

struct elsvkit_config {
  elsv::CampaignConfig value;
};

struct elsvkit_report {
  elsv::CheckReport value;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
elsvkit_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return ELSVKIT_OK;
  } catch (const elsv::Error& e) {
    g_last_error = e.what();
    return static_cast<elsvkit_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ELSVKIT_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ELSVKIT_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) elsv::fail(elsv::ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<int> parse_list(const char* text) {
  std::vector<int> out;
  if (!text) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      elsv::fail(elsv::ErrorCode::Parse, "expected an integer list, got '" + std::string(text) + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      elsv::fail(elsv::ErrorCode::Parse, "expected an integer list, got '" + std::string(text) + "'");
    out.push_back(v);
  }
  return out;
}

elsv::ReportFormat parse_format(const char* format) {
  std::string f = format ? format : "csv";
  if (f == "csv") return elsv::ReportFormat::Csv;
  if (f == "json") return elsv::ReportFormat::Json;
  elsv::fail(elsv::ErrorCode::Parse, "format must be csv or json, got '" + f + "'");
}

}  // namespace

extern "C" {

const char* elsvkit_version(void) { return "0.1.0"; }

const char* elsvkit_last_error(void) { return g_last_error.c_str(); }

const char* elsvkit_status_name(elsvkit_status status) {
  if (status == ELSVKIT_OK) return "ok";
  if (status == ELSVKIT_INTERNAL) return "internal";
  if (status >= ELSVKIT_INVALID_ARGUMENT && status <= ELSVKIT_MISSING_ENTRY)
    return elsv::error_code_name(static_cast<elsv::ErrorCode>(status));
  return "unknown";
}

void elsvkit_string_free(char* s) { std::free(s); }

elsvkit_status elsvkit_intersect(int g, const char* psi, const char* kappa, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_out(elsv::to_display_string(elsv::kappa_psi_intersection(g, parse_list(kappa), parse_list(psi))));
  });
}

elsvkit_status elsvkit_hurwitz(const char* flavor, int r, int g, const char* mu, char** out) {
  return guarded([&] {
    require(flavor, "flavor");
    require(mu, "mu");
    require(out, "out");
    elsv::HurwitzQuery q{elsv::parse_flavor(flavor), r, g, elsv::Partition::parse(mu)};
    *out = copy_out(elsv::to_display_string(elsv::count_connected(q)));
  });
}

elsvkit_status elsvkit_chiodo_integral(int g, int r, int s, const char* mu, char** out) {
  return guarded([&] {
    require(mu, "mu");
    require(out, "out");
    *out = copy_out(elsv::to_display_string(elsv::chiodo_integral_elsv(g, r, s, parse_list(mu))));
  });
}

elsvkit_status elsvkit_closed_form(int g, const char* mu, int r, int s, char** out) {
  return guarded([&] {
    require(mu, "mu");
    require(out, "out");
    *out = copy_out(elsv::to_display_string(elsv::closed_form_N(g, parse_list(mu), r, s)));
  });
}

elsvkit_status elsvkit_tr_table(const char* curve, int g, int n, int mu_max, unsigned precision, char** out) {
  return guarded([&] {
    require(curve, "curve");
    require(out, "out");
    if (precision < 64 || precision > 4096)
      elsv::fail(elsv::ErrorCode::InvalidArgument, "precision must lie in 64..4096 bits");
    auto c = elsv::SpectralCurve::parse(curve);
    elsv::PrecisionScope scope(precision);
    elsv::TrOptions opts;
    opts.precision_bits = precision;
    std::string csv = "curve,g,mu,N,closed_form,abs_diff\n";
    for (const auto& e : elsv::extract_coefficients(c, g, n, mu_max, opts)) {
      elsv::Rat expected;
      switch (c.kind()) {
        case elsv::CurveKind::Srs: expected = elsv::closed_form_N(g, e.mu.parts, c.r(), c.s()); break;
        case elsv::CurveKind::Lambert: expected = elsv::closed_form_N(g, e.mu.parts, 1, 1); break;
        case elsv::CurveKind::Monotone: expected = elsv::monotone_elsv_rhs(g, e.mu.parts); break;
      }
      std::string mu;
      for (std::size_t i = 0; i < e.mu.parts.size(); ++i) mu += (i ? " " : "") + std::to_string(e.mu.parts[i]);
      csv += c.name() + "," + std::to_string(g) + "," + mu + "," + e.value.to_string(25) + "," +
             elsv::to_display_string(expected) + "," + abs(e.value - elsv::BigFloat(expected)).to_string(6) + "\n";
    }
    *out = copy_out(csv);
  });
}

elsvkit_status elsvkit_config_new(elsvkit_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new elsvkit_config{};
  });
}

void elsvkit_config_free(elsvkit_config* cfg) { delete cfg; }

elsvkit_status elsvkit_config_set(elsvkit_config* cfg, const char* key, const char* value) {
  return guarded([&] {
    require(cfg, "config");
    require(key, "key");
    cfg->value.set(key, value ? value : "");
  });
}

elsvkit_status elsvkit_config_load(elsvkit_config* cfg, const char* path) {
  return guarded([&] {
    require(cfg, "config");
    require(path, "path");
    cfg->value.merge_file(path);
  });
}

elsvkit_status elsvkit_config_serialize(const elsvkit_config* cfg, char** out) {
  return guarded([&] {
    require(cfg, "config");
    require(out, "out");
    *out = copy_out(cfg->value.serialize());
  });
}

elsvkit_status elsvkit_config_get(const elsvkit_config* cfg, const char* key, char** out) {
  return guarded([&] {
    require(cfg, "config");
    require(key, "key");
    require(out, "out");
    std::stringstream ss(cfg->value.serialize());
    std::string line;
    const std::string prefix = std::string(key) + " = ";
    while (std::getline(ss, line))
      if (line.rfind(prefix, 0) == 0) {
        *out = copy_out(line.substr(prefix.size()));
        return;
      }
    elsv::fail(elsv::ErrorCode::Parse, std::string("unknown config key '") + key + "'");
  });
}

elsvkit_status elsvkit_run_campaign(const elsvkit_config* cfg, elsvkit_report** out) {
  return guarded([&] {
    require(cfg, "config");
    require(out, "out");
    *out = new elsvkit_report{elsv::run_campaign(cfg->value)};
  });
}

void elsvkit_report_free(elsvkit_report* report) { delete report; }

elsvkit_status elsvkit_report_counts(const elsvkit_report* report, size_t* rows, size_t* passed, size_t* failed,
                                     size_t* errors) {
  return guarded([&] {
    require(report, "report");
    const auto& r = report->value;
    if (rows) *rows = r.rows.size();
    if (passed) *passed = r.count(elsv::Verdict::Pass);
    if (failed) *failed = r.count(elsv::Verdict::Fail);
    if (errors) *errors = r.count(elsv::Verdict::Error);
  });
}

elsvkit_status elsvkit_report_emit(const elsvkit_report* report, const char* format, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = copy_out(elsv::emit_table(report->value, parse_format(format)));
  });
}

elsvkit_status elsvkit_report_write(const elsvkit_report* report, const char* format, const char* path) {
  return guarded([&] {
    require(report, "report");
    require(path, "path");
    elsv::write_table(report->value, parse_format(format), path);
  });
}

elsvkit_status elsvkit_report_from_json(const char* json, elsvkit_report** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new elsvkit_report{elsv::parse_report_json(json)};
  });
}

elsvkit_status elsvkit_cache_load(const char* path) {
  return guarded([&] {
    require(path, "path");
    elsv::IntersectionCache::global().load(path);
  });
}

elsvkit_status elsvkit_cache_flush(const char* path) {
  return guarded([&] {
    require(path, "path");
    elsv::IntersectionCache::global().flush(path);
  });
}

elsvkit_status elsvkit_cache_stats(size_t* entries, size_t* hits, size_t* misses, size_t* loaded) {
  return guarded([&] {
    auto s = elsv::IntersectionCache::global().stats();
    if (entries) *entries = s.entries;
    if (hits) *hits = s.hits;
    if (misses) *misses = s.misses;
    if (loaded) *loaded = s.loaded;
  });
}

elsvkit_status elsvkit_cache_clear(const char* path) {
  return guarded([&] {
    elsv::IntersectionCache::global().clear();
    if (path) {
      std::error_code ec;
      std::filesystem::remove(path, ec);
      if (ec) elsv::fail(elsv::ErrorCode::Io, std::string("cannot remove '") + path + "': " + ec.message());
    }
  });
}

}  // extern "C"
