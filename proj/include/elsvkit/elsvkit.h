#ifndef ELSVKIT_ELSVKIT_H
#define ELSVKIT_ELSVKIT_H

#include <stddef.h>

#if defined(ELSVKIT_BUILDING)
#define ELSVKIT_API __attribute__((visibility("default")))
#else
#define ELSVKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every function returns one of these; on failure the message
 * is available from elsvkit_last_error() on the calling thread. */
typedef enum elsvkit_status {
  ELSVKIT_OK = 0,
  ELSVKIT_INVALID_ARGUMENT = 1,
  ELSVKIT_UNSTABLE = 2,
  ELSVKIT_PRECONDITION = 3,
  ELSVKIT_PARSE = 4,
  ELSVKIT_IO = 5,
  ELSVKIT_RESOURCE = 6,
  ELSVKIT_PRECISION = 7,
  ELSVKIT_UNSUPPORTED = 8,
  ELSVKIT_CONSISTENCY = 9,
  ELSVKIT_MISSING_ENTRY = 10,
  ELSVKIT_INTERNAL = 99
} elsvkit_status;

typedef struct elsvkit_config elsvkit_config;
typedef struct elsvkit_report elsvkit_report;

ELSVKIT_API const char* elsvkit_version(void);
ELSVKIT_API const char* elsvkit_last_error(void);
ELSVKIT_API const char* elsvkit_status_name(elsvkit_status status);

/* Strings returned through char** out parameters are owned by the caller. */
ELSVKIT_API void elsvkit_string_free(char* s);

/* Exact results are written as "p/q" (or "p" when integral). Exponent and
 * partition lists are comma separated, e.g. "2,1,1". */
ELSVKIT_API elsvkit_status elsvkit_intersect(int g, const char* psi, const char* kappa, char** out);
/* flavor: simple, monotone or orbifold. Connected count weighted by 1/|Aut|
 * of the monodromy data. */
ELSVKIT_API elsvkit_status elsvkit_hurwitz(const char* flavor, int r, int g, const char* mu, char** out);
/* Integral of the Chiodo class C_{g,n}(r,s;a) against prod 1/(1 - mu_i psi_i / r)
 * with a_i determined by mu. */
ELSVKIT_API elsvkit_status elsvkit_chiodo_integral(int g, int r, int s, const char* mu, char** out);
ELSVKIT_API elsvkit_status elsvkit_closed_form(int g, const char* mu, int r, int s, char** out);
/* CSV "curve,g,mu,N,closed_form,abs_diff" for every mu with n parts up to
 * mu_max, from the recursion on curve ("S(r,s)", "lambert", "monotone"). */
ELSVKIT_API elsvkit_status elsvkit_tr_table(const char* curve, int g, int n, int mu_max, unsigned precision, char** out);

ELSVKIT_API elsvkit_status elsvkit_config_new(elsvkit_config** out);
ELSVKIT_API void elsvkit_config_free(elsvkit_config* cfg);
ELSVKIT_API elsvkit_status elsvkit_config_set(elsvkit_config* cfg, const char* key, const char* value);
/* Applies every key = value line of a file on top of the current values. */
ELSVKIT_API elsvkit_status elsvkit_config_load(elsvkit_config* cfg, const char* path);
ELSVKIT_API elsvkit_status elsvkit_config_serialize(const elsvkit_config* cfg, char** out);
/* Reads a single key back in its serialized form. */
ELSVKIT_API elsvkit_status elsvkit_config_get(const elsvkit_config* cfg, const char* key, char** out);

/* Row failures are reported in the report; the status is non-zero only for
 * configuration and resource problems. */
ELSVKIT_API elsvkit_status elsvkit_run_campaign(const elsvkit_config* cfg, elsvkit_report** out);
ELSVKIT_API void elsvkit_report_free(elsvkit_report* report);
ELSVKIT_API elsvkit_status elsvkit_report_counts(const elsvkit_report* report, size_t* rows, size_t* passed,
                                                 size_t* failed, size_t* errors);
/* format: "csv" or "json". */
ELSVKIT_API elsvkit_status elsvkit_report_emit(const elsvkit_report* report, const char* format, char** out);
ELSVKIT_API elsvkit_status elsvkit_report_write(const elsvkit_report* report, const char* format, const char* path);
ELSVKIT_API elsvkit_status elsvkit_report_from_json(const char* json, elsvkit_report** out);

/* Intersection-number cache of this process. */
ELSVKIT_API elsvkit_status elsvkit_cache_load(const char* path);
ELSVKIT_API elsvkit_status elsvkit_cache_flush(const char* path);
ELSVKIT_API elsvkit_status elsvkit_cache_stats(size_t* entries, size_t* hits, size_t* misses, size_t* loaded);
/* Empties the in-memory cache and removes the file when path is non-null. */
ELSVKIT_API elsvkit_status elsvkit_cache_clear(const char* path);

#ifdef __cplusplus
}
#endif

#endif
