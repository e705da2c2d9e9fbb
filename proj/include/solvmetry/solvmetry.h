#ifndef SOLVMETRY_H
#define SOLVMETRY_H

/* C interface to libsolvmetry.
 *
 * Every function returning sm_status sets a thread-local message readable
 * with sm_last_error() when it fails. Strings returned through char** are
 * owned by the caller and released with sm_string_free(). Handles are
 * released with their _free function; passing NULL to a _free is a no-op.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(SOLVMETRY_BUILDING)
#define SOLVMETRY_API __attribute__((visibility("default")))
#else
#define SOLVMETRY_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sm_status {
  SM_OK = 0,
  SM_DOMAIN_ERROR = 1,   /* well-formed input outside a theorem's hypotheses */
  SM_INPUT_ERROR = 2,    /* unreadable, malformed or invalid input */
  SM_INTERNAL_ERROR = 3  /* failed self-check or unexpected exception */
} sm_status;

typedef struct sm_algebra sm_algebra;
typedef struct sm_subspace sm_subspace;
typedef struct sm_options sm_options;

/* Skip the Jacobi check when loading, so that `validate` can report it. */
#define SM_LOAD_NO_JACOBI 1u

SOLVMETRY_API const char* sm_version(void);
SOLVMETRY_API const char* sm_last_error(void);
SOLVMETRY_API void sm_string_free(char* s);

/* Algebras. `catalog:<name>` is accepted by sm_algebra_load as a path. */
SOLVMETRY_API sm_status sm_algebra_load(const char* path, unsigned flags, sm_algebra** out);
SOLVMETRY_API sm_status sm_algebra_parse(const char* json_text, const char* source, unsigned flags, sm_algebra** out);
SOLVMETRY_API sm_status sm_algebra_from_catalog(const char* name, sm_algebra** out);
SOLVMETRY_API sm_status sm_algebra_to_json(const sm_algebra* a, char** out);
SOLVMETRY_API size_t sm_algebra_dim(const sm_algebra* a);
SOLVMETRY_API void sm_algebra_free(sm_algebra* a);

/* Subspace files: {"ambient_dim": n, "basis": [[...], ...]}. */
SOLVMETRY_API sm_status sm_subspace_load(const char* path, sm_subspace** out);
SOLVMETRY_API sm_status sm_subspace_parse(const char* json_text, sm_subspace** out);
SOLVMETRY_API size_t sm_subspace_dim(const sm_subspace* s);
SOLVMETRY_API void sm_subspace_free(sm_subspace* s);

/* Run options. */
SOLVMETRY_API sm_options* sm_options_new(void);
SOLVMETRY_API void sm_options_free(sm_options* o);
SOLVMETRY_API sm_status sm_options_set_tol(sm_options* o, double eps_rank, double eps_eig);
SOLVMETRY_API void sm_options_set_seed(sm_options* o, uint64_t seed);
/* role is "subalgebra" or "iwasawa". The subspace is copied. */
SOLVMETRY_API sm_status sm_options_set_subspace(sm_options* o, const char* role, const sm_subspace* s);
SOLVMETRY_API sm_status sm_options_load_lr(sm_options* o, const char* path);

/* Runs one command and returns its JSON report in *report (also on failure,
 * when the report carries the error). `a` may be NULL only for "catalog";
 * `opts` may be NULL for defaults. */
SOLVMETRY_API sm_status sm_run(const char* command, const sm_algebra* a, const sm_options* opts, char** report);

/* Loads `input` (a path or "catalog:<name>") and runs `command` on it. A load
 * failure still yields a report carrying the error. */
SOLVMETRY_API sm_status sm_run_input(const char* command, const char* input, const sm_options* opts, char** report);

/* Newline-separated catalog entry names. */
SOLVMETRY_API sm_status sm_catalog_list(char** out);
/* Text rendering of a report or of a JSON array of reports. */
SOLVMETRY_API sm_status sm_render_text(const char* report_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
