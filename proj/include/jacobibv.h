/* jacobibv: exact symbolic calculus for Jacobi structures -- C API.
 *
 * The library computes, over an exact coefficient ring (rational-coefficient
 * polynomials times exponentials of rational linear forms), the 1-jet
 * algebroid bracket of a Jacobi pair, the exact generator of its Gerstenhaber
 * algebra, the cohomology coboundary, modular data, star duality with exact
 * truncated Betti numbers, and the twisted brackets attached to a Poisson
 * bivector with a closed 2-form.
 *
 * All objects are opaque handles.  Functions return JBV_OK on success; on
 * failure *err (when non-NULL) receives a malloc'd message the caller frees
 * with jbv_string_free.
 */
#ifndef JACOBIBV_H
#define JACOBIBV_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct jbv_structure jbv_structure;
typedef struct jbv_report jbv_report;

typedef enum {
  JBV_OK = 0,
  JBV_EINVAL = 1,   /* bad arguments, unknown command/suite */
  JBV_EPARSE = 2,   /* syntax or structural error in the input */
  JBV_EMATH = 3     /* an operation refused (degree/kind/ring constraints) */
} jbv_status;

typedef struct jbv_run_options {
  uint64_t seed;      /* 0 picks the default seed */
  int trials;         /* <= 0 picks the default */
  int max_degree;     /* coefficient-degree bound for truncations/solvers */
  int json;           /* nonzero: report text is JSON records */
} jbv_run_options;

const char* jbv_version(void);

/* Builds a structure from preset syntax: "contact:n", "gcs:n:slope[,...]",
 * "const:r11,r12;r21,r22;...". */
jbv_status jbv_structure_preset(const char* spec, jbv_structure** out, char** err);

/* Parses a structure file (see the README for the grammar). */
jbv_status jbv_structure_parse(const char* text, jbv_structure** out, char** err);

/* Canonical round-trip printing of a structure. */
jbv_status jbv_structure_print(const jbv_structure* s, char** out, char** err);

void jbv_structure_free(jbv_structure* s);

/* Runs a command against a structure.  Commands:
 *   check-jacobi | check-omega-poisson | modular | elw | duality | betti
 *   bv | sigma | verify:<suite>|verify:all | counterexample-nonstrong
 * `expr` feeds the commands that take an input value:
 *   bv / sigma:  "<weight>; <slot1 expr>; <slot2 expr>"
 *   elw:         a coefficient expression for f
 *   betti:       an operator name (bv, sigma, d0, bar-d, twisted)
 */
jbv_status jbv_run(const jbv_structure* s, const char* command, const char* expr,
                   const jbv_run_options* opts, jbv_report** out, char** err);

/* 1 when every check in the report passed. */
int jbv_report_passed(const jbv_report* r);

/* Rendered report (text or JSON per the run options); owned by the report. */
const char* jbv_report_text(const jbv_report* r);

void jbv_report_free(jbv_report* r);
void jbv_string_free(char* s);

/* Names of the available verification suites as a newline-joined list. */
jbv_status jbv_suite_names(char** out, char** err);

#ifdef __cplusplus
}
#endif

#endif /* JACOBIBV_H */
