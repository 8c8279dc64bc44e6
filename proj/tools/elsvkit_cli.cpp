#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "elsvkit/elsvkit.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Owned {
  char* text = nullptr;
  ~Owned() { elsvkit_string_free(text); }
};

int report_error(elsvkit_status status) {
  std::cerr << "elsvkit: " << elsvkit_status_name(status) << ": " << elsvkit_last_error() << "\n";
  return kExitConfig;
}

std::string default_cache_path() {
  const char* dir = std::getenv("ELSVKIT_CACHE_DIR");
  if (!dir || !*dir) return "";
  return (std::filesystem::path(dir) / "intersections.cache").string();
}

// Prints one exact value produced by a C API call, with the cache file
// loaded before and flushed after when one is configured.
template <typename F>
int print_value(const std::string& cache, F&& call, const std::string& prefix = "") {
  if (!cache.empty()) {
    if (auto st = elsvkit_cache_load(cache.c_str()); st != ELSVKIT_OK) return report_error(st);
  }
  Owned out;
  if (auto st = call(&out.text); st != ELSVKIT_OK) return report_error(st);
  std::cout << prefix << out.text << (out.text[0] && out.text[std::char_traits<char>::length(out.text) - 1] == '\n' ? "" : "\n");
  if (!cache.empty()) {
    if (auto st = elsvkit_cache_flush(cache.c_str()); st != ELSVKIT_OK) return report_error(st);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz numbers, Chiodo classes and topological recursion checks"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned precision = 256;
  std::string cache = default_cache_path();
  std::string out_path;
  std::string format = "csv";
  bool fail_fast = false;
  bool extended = false;
  bool timing = false;
  auto* precision_opt = app.add_option("--precision", precision, "working precision in bits")->check(CLI::Range(64, 4096));
  auto* cache_opt = app.add_option("--cache", cache, "intersection cache file (default $ELSVKIT_CACHE_DIR/intersections.cache)");
  auto* out_opt = app.add_option("--out", out_path, "write the report here instead of stdout");
  auto* format_opt = app.add_option("--format", format, "report format")->check(CLI::IsMember({"csv", "json"}));
  auto* fail_fast_opt = app.add_flag("--fail-fast", fail_fast, "stop at the first failing case");
  auto* extended_opt = app.add_flag("--extended", extended, "widen the default ranges");
  auto* timing_opt = app.add_flag("--timing", timing, "record per-row seconds (makes output run dependent)");

  int g = 0;
  int r = 1;
  int s = 1;
  std::string psi, kappa, mu, flavor = "simple", curve = "S(1,1)";

  auto* intersect = app.add_subcommand("intersect", "kappa/psi intersection number on the moduli of stable curves");
  intersect->add_option("-g,--genus", g)->required();
  intersect->add_option("--psi", psi, "psi exponents, e.g. 1,1,0")->required();
  intersect->add_option("--kappa", kappa, "kappa indices, e.g. 1,2");

  auto* hurwitz = app.add_subcommand("hurwitz", "connected Hurwitz count");
  hurwitz->add_option("--flavor", flavor)->check(CLI::IsMember({"simple", "monotone", "orbifold"}));
  hurwitz->add_option("-r", r, "orbifold order");
  hurwitz->add_option("-g,--genus", g)->required();
  hurwitz->add_option("--mu", mu, "ramification profile, e.g. 2,1")->required();

  bool closed_form = false;
  auto* chiodo = app.add_subcommand("chiodo", "Chiodo-class integral with ELSV-type legs");
  chiodo->add_option("-g,--genus", g)->required();
  chiodo->add_option("-r", r)->required();
  chiodo->add_option("-s", s)->required();
  chiodo->add_option("--mu", mu)->required();
  chiodo->add_flag("--closed-form", closed_form, "print the full prefactored value N_{g,mu} instead");

  int n = 1;
  int mu_max = 3;
  auto* tr = app.add_subcommand("tr", "correlator coefficients from topological recursion");
  tr->add_option("--curve", curve, "S(r,s), lambert or monotone");
  tr->add_option("-g,--genus", g)->required();
  tr->add_option("-n", n)->required();
  tr->add_option("--mu-max", mu_max);

  std::string check_id;
  std::string config_path;
  std::vector<std::string> overrides;
  unsigned threads = 0;
  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("check", check_id, "elsv, monotone-elsv, jpt, rspin-rhs, tr-equivalence, mumford, "
                                        "givental-consistency, doss, table or all")
      ->required();
  verify->add_option("--config", config_path, "key = value campaign file");
  verify->add_option("--set", overrides, "key=value override, repeatable");
  verify->add_option("--threads", threads, "worker threads");

  auto* cache_cmd = app.add_subcommand("cache", "intersection cache administration");
  cache_cmd->require_subcommand(1);
  auto* cache_stats = cache_cmd->add_subcommand("stats", "entries in the cache file");
  auto* cache_clear = cache_cmd->add_subcommand("clear", "delete the cache file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (*intersect)
    return print_value(cache, [&](char** o) { return elsvkit_intersect(g, psi.c_str(), kappa.c_str(), o); });
  if (*hurwitz)
    return print_value("", [&](char** o) { return elsvkit_hurwitz(flavor.c_str(), r, g, mu.c_str(), o); });
  if (*chiodo) {
    std::string parts = mu;
    std::replace(parts.begin(), parts.end(), ',', ' ');
    std::string row = std::to_string(g) + ',' + std::to_string(r) + ',' + std::to_string(s) + ',' + parts + ',';
    return print_value(
        cache,
        [&](char** o) {
          return closed_form ? elsvkit_closed_form(g, mu.c_str(), r, s, o)
                             : elsvkit_chiodo_integral(g, r, s, mu.c_str(), o);
        },
        "g,r,s,mu,value\n" + row);
  }
  if (*tr)
    return print_value(cache, [&](char** o) { return elsvkit_tr_table(curve.c_str(), g, n, mu_max, precision, o); });

  if (*cache_cmd) {
    if (cache.empty()) {
      std::cerr << "elsvkit: no cache file (use --cache or set ELSVKIT_CACHE_DIR)\n";
      return kExitConfig;
    }
    if (*cache_stats) {
      if (auto st = elsvkit_cache_load(cache.c_str()); st != ELSVKIT_OK) return report_error(st);
      size_t entries = 0;
      elsvkit_cache_stats(&entries, nullptr, nullptr, nullptr);
      std::cout << "path " << cache << "\nentries " << entries << "\n";
      return 0;
    }
    if (*cache_clear) {
      if (auto st = elsvkit_cache_clear(cache.c_str()); st != ELSVKIT_OK) return report_error(st);
      std::cout << "cleared " << cache << "\n";
      return 0;
    }
  }

  // verify
  elsvkit_config* cfg = nullptr;
  elsvkit_config_new(&cfg);
  std::unique_ptr<elsvkit_config, decltype(&elsvkit_config_free)> cfg_guard(cfg, elsvkit_config_free);
  auto set = [&](const std::string& key, const std::string& value) {
    elsvkit_status st = elsvkit_config_set(cfg, key.c_str(), value.c_str());
    if (st != ELSVKIT_OK) throw st;
  };
  try {
    if (!cache.empty()) set("cache", cache);
    if (!config_path.empty()) {
      if (auto st = elsvkit_config_load(cfg, config_path.c_str()); st != ELSVKIT_OK) throw st;
    }
    set("check", check_id);
    if (precision_opt->count()) set("precision", std::to_string(precision));
    if (cache_opt->count()) set("cache", cache);
    if (out_opt->count()) set("out", out_path);
    if (format_opt->count()) set("format", format);
    if (fail_fast_opt->count()) set("fail_fast", "true");
    if (extended_opt->count()) set("extended", "true");
    if (timing_opt->count()) set("timing", "true");
    if (threads) set("threads", std::to_string(threads));
    for (const auto& kv : overrides) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) {
        std::cerr << "elsvkit: --set expects key=value, got '" << kv << "'\n";
        return kExitConfig;
      }
      set(kv.substr(0, eq), kv.substr(eq + 1));
    }
  } catch (elsvkit_status st) {
    return report_error(st);
  }

  elsvkit_report* report = nullptr;
  if (auto st = elsvkit_run_campaign(cfg, &report); st != ELSVKIT_OK) return report_error(st);
  std::unique_ptr<elsvkit_report, decltype(&elsvkit_report_free)> report_guard(report, elsvkit_report_free);

  Owned fmt, dest;
  elsvkit_config_get(cfg, "format", &fmt.text);
  elsvkit_config_get(cfg, "out", &dest.text);
  if (dest.text[0]) {
    if (auto st = elsvkit_report_write(report, fmt.text, dest.text); st != ELSVKIT_OK) return report_error(st);
  } else {
    Owned table;
    if (auto st = elsvkit_report_emit(report, fmt.text, &table.text); st != ELSVKIT_OK) return report_error(st);
    std::fputs(table.text, stdout);
  }

  size_t rows = 0, passed = 0, failed = 0, errors = 0;
  elsvkit_report_counts(report, &rows, &passed, &failed, &errors);
  std::cerr << check_id << ": " << rows << " rows, " << passed << " passed, " << failed << " failed, " << errors
            << " errors\n";
  return passed == rows ? 0 : kExitFail;
}
