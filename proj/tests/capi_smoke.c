#include <stdio.h>
#include <string.h>

#include "elsvkit/elsvkit.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int starts_with(const char* text, const char* prefix) {
  return text && strncmp(text, prefix, strlen(prefix)) == 0;
}

static int value_is(elsvkit_status st, char* text, const char* expected) {
  int ok = st == ELSVKIT_OK && text && strcmp(text, expected) == 0;
  if (!ok) fprintf(stderr, "got %s (%s), expected %s\n", text ? text : "null", elsvkit_last_error(), expected);
  elsvkit_string_free(text);
  return ok;
}

int main(void) {
  char* out = NULL;
  elsvkit_status st;

  st = elsvkit_intersect(1, "1", "", &out);
  EXPECT(value_is(st, out, "1/24"));
  out = NULL;
  st = elsvkit_intersect(1, "0", "1", &out);
  EXPECT(value_is(st, out, "1/24"));
  out = NULL;
  st = elsvkit_hurwitz("simple", 1, 1, "2", &out);
  EXPECT(value_is(st, out, "1/2"));
  out = NULL;
  st = elsvkit_closed_form(1, "2", 2, 2, &out);
  EXPECT(value_is(st, out, "1/2"));
  out = NULL;
  st = elsvkit_chiodo_integral(1, 1, 1, "2", &out);
  EXPECT(value_is(st, out, "1/24"));

  out = NULL;
  EXPECT(elsvkit_tr_table("S(2,0)", 1, 1, 2, 256, &out) == ELSVKIT_UNSUPPORTED);
  EXPECT(out == NULL);
  EXPECT(strlen(elsvkit_last_error()) > 0);
  EXPECT(elsvkit_intersect(0, "0,0", "", &out) == ELSVKIT_UNSTABLE);
  EXPECT(elsvkit_hurwitz("fancy", 1, 1, "2", &out) == ELSVKIT_PARSE);
  EXPECT(elsvkit_intersect(1, "1", "", NULL) == ELSVKIT_INVALID_ARGUMENT);

  EXPECT(elsvkit_tr_table("S(1,1)", 0, 3, 1, 256, &out) == ELSVKIT_OK);
  EXPECT(starts_with(out, "curve,g,mu,N,closed_form,abs_diff\nS(1,1),0,1 1 1,"));
  elsvkit_string_free(out);

  elsvkit_config* cfg = NULL;
  EXPECT(elsvkit_config_new(&cfg) == ELSVKIT_OK);
  EXPECT(elsvkit_config_set(cfg, "check", "mumford") == ELSVKIT_OK);
  EXPECT(elsvkit_config_set(cfg, "check", "nonsense") == ELSVKIT_PARSE);
  EXPECT(elsvkit_config_set(cfg, "precision", "12") == ELSVKIT_INVALID_ARGUMENT);
  out = NULL;
  st = elsvkit_config_get(cfg, "check", &out);
  EXPECT(value_is(st, out, "mumford"));

  elsvkit_report* report = NULL;
  EXPECT(elsvkit_run_campaign(cfg, &report) == ELSVKIT_OK);
  size_t rows = 0, passed = 0, failed = 1, errors = 1;
  EXPECT(elsvkit_report_counts(report, &rows, &passed, &failed, &errors) == ELSVKIT_OK);
  EXPECT(rows == 6 && passed == 6 && failed == 0 && errors == 0);

  char* csv = NULL;
  EXPECT(elsvkit_report_emit(report, "csv", &csv) == ELSVKIT_OK);
  EXPECT(starts_with(csv, "check,g,r,s,mu,lhs,rhs,verdict,seconds\nmumford,1,1,1,psi^0,-1/24,-1/24,pass,-\n"));
  elsvkit_string_free(csv);

  char* json = NULL;
  char* again = NULL;
  elsvkit_report* parsed = NULL;
  EXPECT(elsvkit_report_emit(report, "json", &json) == ELSVKIT_OK);
  EXPECT(elsvkit_report_from_json(json, &parsed) == ELSVKIT_OK);
  EXPECT(elsvkit_report_emit(parsed, "json", &again) == ELSVKIT_OK);
  EXPECT(json && again && strcmp(json, again) == 0);
  EXPECT(elsvkit_report_emit(report, "xml", &out) == ELSVKIT_PARSE);
  EXPECT(elsvkit_report_from_json("{", &parsed) == ELSVKIT_PARSE);
  elsvkit_string_free(json);
  elsvkit_string_free(again);
  elsvkit_report_free(parsed);
  elsvkit_report_free(report);
  elsvkit_config_free(cfg);

  size_t entries = 0;
  EXPECT(elsvkit_cache_stats(&entries, NULL, NULL, NULL) == ELSVKIT_OK);
  EXPECT(entries > 0);
  EXPECT(elsvkit_cache_clear(NULL) == ELSVKIT_OK);
  EXPECT(elsvkit_cache_stats(&entries, NULL, NULL, NULL) == ELSVKIT_OK);
  EXPECT(entries == 0);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
