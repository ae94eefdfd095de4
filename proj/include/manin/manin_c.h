#ifndef MANIN_C_H
#define MANIN_C_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MANIN_API __declspec(dllexport)
#else
#define MANIN_API __attribute__((visibility("default")))
#endif

/* Status codes. */
enum {
  MANIN_OK = 0,
  MANIN_VERIFY_FAILED = 1,
  MANIN_INPUT_ERROR = 2,
  MANIN_BUDGET_ERROR = 3,
  MANIN_INTERNAL_ERROR = 4
};

typedef struct manin_idempotent manin_idempotent;

/* Message for the last non-OK status on this thread; empty when none. */
MANIN_API const char* manin_last_error(void);
/* Releases strings returned through char** out-parameters. */
MANIN_API void manin_string_free(char* s);

/* Idempotent handle from a spec {"family", "n", "params"}. */
MANIN_API int manin_idempotent_from_json(const char* spec_json, manin_idempotent** out);
MANIN_API void manin_idempotent_free(manin_idempotent* h);
/* Side length n^2 of the operator. */
MANIN_API int manin_idempotent_size(const manin_idempotent* h, size_t* out);
/* Canonical spec JSON. */
MANIN_API int manin_idempotent_spec(const manin_idempotent* h, char** out_json);
/* Operator entries as a JSON array of rational strings. */
MANIN_API int manin_idempotent_matrix(const manin_idempotent* h, char** out_json);
/* Report {"idempotent", "rank", "trace"}; MANIN_VERIFY_FAILED when E^2 != E. */
MANIN_API int manin_idempotent_check(const manin_idempotent* h, char** out_json);
/* variant: X, Xi, Xstar or Xistar. JSON array of graded dimensions 0..max_degree. */
MANIN_API int manin_idempotent_dims(const manin_idempotent* h, const char* variant, int max_degree, char** out_json);
/* side: "left" or "right". *result is 1 when equivalent. */
MANIN_API int manin_equivalent(const manin_idempotent* a, const manin_idempotent* b, const char* side, int* result);

/* kind: S or A; method: generic, group, hecke, brauer or closed. Operator plus axiom report. */
MANIN_API int manin_pairing(const manin_idempotent* h, int k, const char* kind, const char* method, char** out_json);

/* pair_json: {"a": spec, "b": spec}. MANIN_VERIFY_FAILED when the matrix is not Manin. */
MANIN_API int manin_check_matrix(const char* pair_json, const char* matrix_text, const char* relations_text,
                                 char** out_json);
/* Minor operator A_(k) M..M (kind A) or M..M S~_(k) (kind S) as polynomial strings. */
MANIN_API int manin_minor(const char* pair_json, int k, const char* kind, const char* matrix_text, char** out_json);

/* name: bcd ({"family", "n"}), fourparam ({"a", "b", "c", "kappa"}) or lie ({"n", "structure"}). */
MANIN_API int manin_scenario(const char* name, const char* options_json, char** out_json);
/* MANIN_VERIFY_FAILED unless every item passes. */
MANIN_API int manin_verify_suite(const char* suite, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* MANIN_C_H */
