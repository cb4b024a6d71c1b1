#ifndef NILREP_H
#define NILREP_H

/*
 * C interface to the nilrep library.
 *
 * All rationals cross the boundary as strings ("p", "p/q" or a finite
 * decimal) so that nothing is rounded. Objects are opaque handles owned by
 * the caller and released with the matching *_free function. Every fallible
 * call returns a nilrep_status; on failure nilrep_last_error() describes the
 * problem (thread-local, valid until the next call on the same thread).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NILREP_BUILDING_LIBRARY)
#    define NILREP_API __declspec(dllexport)
#  else
#    define NILREP_API __declspec(dllimport)
#  endif
#else
#  define NILREP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nilrep_status {
  NILREP_OK = 0,
  NILREP_ERR_NULL_ARGUMENT = 1,
  NILREP_ERR_PARSE = 2,            /* malformed rational or option name */
  NILREP_ERR_INVALID_ARGUMENT = 3, /* e.g. lambda = 0 for a generic case */
  NILREP_ERR_DOMAIN = 4,           /* precondition violated, e.g. non-lattice grid shift */
  NILREP_ERR_INTERNAL = 5
} nilrep_status;

typedef enum nilrep_case_kind {
  NILREP_CASE_GENERIC = 0,    /* rho_{alpha,lambda}, lambda != 0 */
  NILREP_CASE_NONGENERIC = 1, /* rho_nu */
  NILREP_CASE_TRIVIAL = 2
} nilrep_case_kind;

typedef struct nilrep_case nilrep_case;     /* a representation rho_Lambda */
typedef struct nilrep_op nilrep_op;         /* a phase-shift operator f(u) -> e^{i p(u)} f(u - a) */
typedef struct nilrep_report nilrep_report; /* a text + JSON document with a pass/fail flag */

NILREP_API const char* nilrep_version(void);
NILREP_API const char* nilrep_status_string(nilrep_status status);
NILREP_API const char* nilrep_last_error(void);

/* ---- representation cases ---------------------------------------------- */

/* generic: p1 = alpha, p2 = lambda; nongeneric: p1 = nu, p2 ignored; trivial: both ignored. */
NILREP_API nilrep_status nilrep_case_create(nilrep_case_kind kind, const char* p1, const char* p2,
                                            nilrep_case** out);
NILREP_API void nilrep_case_free(nilrep_case* c);

/* ---- operators ---------------------------------------------------------- */

/* rho(case, (s,x,y,t)); point is an array of four rational strings. */
NILREP_API nilrep_status nilrep_op_rho(const nilrep_case* c, const char* const point[4], nilrep_op** out);
NILREP_API nilrep_status nilrep_op_omega(const nilrep_case* c, const char* k1, const char* k2, nilrep_op** out);
NILREP_API nilrep_status nilrep_op_compose(const nilrep_op* lhs, const nilrep_op* rhs, nilrep_op** out);
NILREP_API nilrep_status nilrep_op_inverse(const nilrep_op* op, nilrep_op** out);
NILREP_API nilrep_status nilrep_op_equal(const nilrep_op* a, const nilrep_op* b, int* out);
/* index 0 = shift a, 1..3 = phase coefficients c0, c1, c2. String owned by op. */
NILREP_API const char* nilrep_op_coefficient(const nilrep_op* op, int index);
/* Readable formula; string owned by op. */
NILREP_API const char* nilrep_op_formula(const nilrep_op* op);
/* max | <Af,Ag> - <f,g> | / (|f||g|) over random grid functions. */
NILREP_API nilrep_status nilrep_op_unitarity_defect(const nilrep_op* op, size_t grid_n, double half_width,
                                                    int trials, uint64_t seed, double* out);
NILREP_API void nilrep_op_free(nilrep_op* op);

/* ---- reports ------------------------------------------------------------ */

typedef struct nilrep_verify_options {
  uint64_t seed;
  const char* case_selector; /* "all", "generic", "nongeneric", "trivial"; NULL = all */
  const char* alpha;         /* with lambda: replaces the default generic parameter list */
  const char* lambda;
  const char* nu;            /* replaces the default non-generic parameter list */
  int group_trials;          /* 0 = default for all trial counts */
  int rep_trials;
  int pair_trials;
  int grid_functions;
  size_t grid_n;
  double grid_half_width;
  double grid_tolerance;
  const char* fault; /* NULL or "none" = no fault injection */
} nilrep_verify_options;

NILREP_API void nilrep_verify_options_init(nilrep_verify_options* options);
NILREP_API nilrep_status nilrep_verify(const nilrep_verify_options* options, nilrep_report** out);

/* Number of fault-injection modes and their names (index < count). */
NILREP_API size_t nilrep_fault_count(void);
NILREP_API const char* nilrep_fault_name(size_t index);

NILREP_API nilrep_status nilrep_orbit(const char* alpha, const char* mu, const char* nu, const char* lambda,
                                      nilrep_report** out);

typedef struct nilrep_rep_options {
  const char* point[4]; /* (s,x,y,t); NULL entries mean 0 */
  const char* k1;
  const char* k2;
  int grid_demo;
  size_t grid_n;
  double grid_half_width;
} nilrep_rep_options;

NILREP_API void nilrep_rep_options_init(nilrep_rep_options* options);
NILREP_API nilrep_status nilrep_rep(const nilrep_case* c, const nilrep_rep_options* options, nilrep_report** out);

NILREP_API nilrep_status nilrep_decompose(const nilrep_case* c, size_t sample_size, nilrep_report** out);

/* 1 if every mathematical check in the report passed, else 0. */
NILREP_API int nilrep_report_passed(const nilrep_report* r);
NILREP_API const char* nilrep_report_text(const nilrep_report* r);
/* Pretty-printed JSON (indent 2), newline-terminated. */
NILREP_API const char* nilrep_report_json(const nilrep_report* r);
NILREP_API void nilrep_report_free(nilrep_report* r);

#ifdef __cplusplus
}
#endif

#endif
