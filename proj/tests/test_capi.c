/* Exercises the C interface from C. */

#include "solvmetry/solvmetry.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define CHECK(cond)                                                 \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: CHECK failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                   \
    }                                                               \
  } while (0)

static int contains(const char* s, const char* needle) { return s && strstr(s, needle) != NULL; }

static void test_catalog_and_run(void) {
  sm_algebra* a = NULL;
  CHECK(sm_algebra_from_catalog("hyperbolic:3", &a) == SM_OK);
  CHECK(sm_algebra_dim(a) == 3);

  char* report = NULL;
  CHECK(sm_run("rigidity", a, NULL, &report) == SM_OK);
  CHECK(contains(report, "\"verdict\": \"Symmetric\""));
  CHECK(contains(report, "\"isometry_dim\": 6"));
  CHECK(contains(report, "solvmetry.report/1"));

  char* text = NULL;
  CHECK(sm_render_text(report, &text) == SM_OK);
  CHECK(contains(text, "verdict: Symmetric"));
  sm_string_free(text);
  sm_string_free(report);

  char* json = NULL;
  CHECK(sm_algebra_to_json(a, &json) == SM_OK);
  sm_algebra* b = NULL;
  CHECK(sm_algebra_parse(json, "roundtrip", 0, &b) == SM_OK);
  char* json2 = NULL;
  CHECK(sm_algebra_to_json(b, &json2) == SM_OK);
  CHECK(json && json2 && strcmp(json, json2) == 0);
  sm_string_free(json);
  sm_string_free(json2);
  sm_algebra_free(b);
  sm_algebra_free(a);
}

static void test_errors(void) {
  sm_algebra* a = NULL;
  CHECK(sm_algebra_from_catalog("no_such_algebra", &a) == SM_INPUT_ERROR);
  CHECK(a == NULL);
  CHECK(contains(sm_last_error(), "heisenberg3"));

  CHECK(sm_algebra_parse("{\"dim\": 2,", "broken", 0, &a) == SM_INPUT_ERROR);
  CHECK(contains(sm_last_error(), "line"));

  const char* non_lie =
      "{\"dim\": 3, \"brackets\": [{\"i\": 0, \"j\": 1, \"coeffs\": {\"1\": \"1\"}},"
      "{\"i\": 0, \"j\": 2, \"coeffs\": {\"1\": \"1\"}}, {\"i\": 1, \"j\": 2, \"coeffs\": {\"0\": \"1\"}}]}";
  CHECK(sm_algebra_parse(non_lie, "non_lie", 0, &a) == SM_INPUT_ERROR);
  CHECK(sm_algebra_parse(non_lie, "non_lie", SM_LOAD_NO_JACOBI, &a) == SM_OK);
  char* report = NULL;
  CHECK(sm_run("validate", a, NULL, &report) == SM_INPUT_ERROR);
  CHECK(contains(report, "\"valid\": false"));
  sm_string_free(report);
  sm_algebra_free(a);

  CHECK(sm_algebra_from_catalog("sl2", &a) == SM_OK);
  report = NULL;
  CHECK(sm_run("classify", a, NULL, &report) == SM_DOMAIN_ERROR);
  CHECK(contains(report, "NotSolvable"));
  sm_string_free(report);
  sm_algebra_free(a);

  report = NULL;
  CHECK(sm_run_input("classify", "/nonexistent/file.json", NULL, &report) == SM_INPUT_ERROR);
  CHECK(contains(report, "\"status\": \"input_error\""));
  sm_string_free(report);

  CHECK(sm_run("classify", NULL, NULL, NULL) == SM_INPUT_ERROR);
  CHECK(sm_algebra_load(NULL, 0, &a) == SM_INPUT_ERROR);
  sm_algebra_free(NULL);
  sm_subspace_free(NULL);
  sm_options_free(NULL);
}

static void test_options(void) {
  sm_options* o = sm_options_new();
  CHECK(o != NULL);
  CHECK(sm_options_set_tol(o, -1.0, 1e-8) == SM_INPUT_ERROR);
  CHECK(sm_options_set_tol(o, 1e-10, 1e-9) == SM_OK);
  sm_options_set_seed(o, 7);

  sm_subspace* h = NULL;
  sm_subspace* iw = NULL;
  CHECK(sm_subspace_parse("{\"ambient_dim\": 3, \"basis\": [[\"0\", \"1\", \"-1\"]]}", &h) == SM_OK);
  CHECK(sm_subspace_parse("{\"ambient_dim\": 3, \"basis\": [[\"1\", \"0\", \"0\"], [\"0\", \"1\", \"0\"]]}", &iw) == SM_OK);
  CHECK(sm_subspace_dim(iw) == 2);
  CHECK(sm_options_set_subspace(o, "subalgebra", h) == SM_OK);
  CHECK(sm_options_set_subspace(o, "iwasawa", iw) == SM_OK);
  CHECK(sm_options_set_subspace(o, "other", iw) == SM_INPUT_ERROR);
  sm_subspace_free(h);
  sm_subspace_free(iw);

  char* report = NULL;
  CHECK(sm_run_input("transitive-test", "catalog:sl2", o, &report) == SM_OK);
  CHECK(contains(report, "\"result\": true"));
  CHECK(contains(report, "\"seed\": 7"));
  sm_string_free(report);
  sm_options_free(o);
}

static void test_catalog_list(void) {
  char* list = NULL;
  CHECK(sm_catalog_list(&list) == SM_OK);
  CHECK(contains(list, "nilpotent5\n"));
  sm_string_free(list);
  CHECK(strlen(sm_version()) > 0);
}

int main(void) {
  test_catalog_and_run();
  test_errors();
  test_options();
  test_catalog_list();
  if (failures) fprintf(stderr, "%d check(s) failed\n", failures);
  else printf("all C API checks passed\n");
  return failures ? 1 : 0;
}
