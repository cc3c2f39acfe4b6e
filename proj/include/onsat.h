#ifndef ONSAT_H
#define ONSAT_H

/* C interface to the onsat solver library. All handles are opaque; every
 * fallible call returns an onsat_status and leaves a message retrievable with
 * onsat_last_error() on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ONSAT_BUILDING)
#    define ONSAT_API __declspec(dllexport)
#  else
#    define ONSAT_API __declspec(dllimport)
#  endif
#else
#  define ONSAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum onsat_status {
  ONSAT_OK = 0,
  ONSAT_SAT = 10,
  ONSAT_UNSAT = 20,
  ONSAT_E_INVALID_ARGUMENT = -1,
  ONSAT_E_PARSE = -2,
  ONSAT_E_HEADER_MISMATCH = -3,
  ONSAT_E_TOO_MANY_VARIABLES = -4,
  ONSAT_E_INVALID_ONSET = -5,
  ONSAT_E_FIELD = -6,
  ONSAT_E_INTERNAL = -7,
  ONSAT_E_CHECK_FAILED = -8
} onsat_status;

typedef enum onsat_format {
  ONSAT_FORMAT_AUTO = 0,   /* DIMACS when a "p cnf" line is present */
  ONSAT_FORMAT_DIMACS = 1,
  ONSAT_FORMAT_SYSTEM = 2  /* one "<expr> = <expr>" per line */
} onsat_format;

typedef enum onsat_mode { ONSAT_MODE_DECIDE = 0, ONSAT_MODE_ENUMERATE = 1 } onsat_mode;

typedef struct onsat_problem onsat_problem;
typedef struct onsat_config onsat_config;

ONSAT_API const char* onsat_version(void);
/* Message for the last failed call on this thread; "" if none. */
ONSAT_API const char* onsat_last_error(void);

/* ---- problems ---- */

ONSAT_API onsat_status onsat_problem_parse(const char* text, size_t length, onsat_format format,
                                           int strict_dimacs, onsat_problem** out);
ONSAT_API void onsat_problem_free(onsat_problem* problem);

/* ONSAT_FORMAT_DIMACS or ONSAT_FORMAT_SYSTEM after parsing. */
ONSAT_API onsat_format onsat_problem_format(const onsat_problem* problem);
ONSAT_API size_t onsat_problem_var_count(const onsat_problem* problem);
/* Variable name ("1", "2", ... for DIMACS); NULL when out of range. */
ONSAT_API const char* onsat_problem_var_name(const onsat_problem* problem, size_t var);
ONSAT_API size_t onsat_problem_warning_count(const onsat_problem* problem);
ONSAT_API const char* onsat_problem_warning(const onsat_problem* problem, size_t index);

/* ---- configuration ---- */

ONSAT_API onsat_config* onsat_config_new(void);
ONSAT_API void onsat_config_free(onsat_config* config);
ONSAT_API onsat_status onsat_config_set_mode(onsat_config* config, onsat_mode mode);
ONSAT_API onsat_status onsat_config_set_n0(onsat_config* config, size_t n0);
ONSAT_API onsat_status onsat_config_set_split_depth(onsat_config* config, size_t depth);
ONSAT_API onsat_status onsat_config_set_workers(onsat_config* config, size_t workers);
ONSAT_API onsat_status onsat_config_set_expand_dont_cares(onsat_config* config, int expand);
ONSAT_API size_t onsat_config_workers(const onsat_config* config);

/* ---- solving ---- */

/* values[i] is 0, 1, or -1 for a don't-care. Return nonzero to continue. */
typedef int (*onsat_solution_fn)(const signed char* values, size_t count, void* user);

typedef struct onsat_stats {
  size_t nodes;
  size_t leaves;
  size_t conflicts;
  size_t solutions;
} onsat_stats;

/* Returns ONSAT_SAT or ONSAT_UNSAT on success. stats may be NULL. */
ONSAT_API onsat_status onsat_solve(const onsat_problem* problem, const onsat_config* config,
                                   onsat_solution_fn on_solution, void* user, onsat_stats* stats);

/* ---- expansion identity suite ---- */

/* Called once per identity with the number of checked and failed cases. */
typedef void (*onsat_identity_fn)(const char* name, size_t checked, size_t failed,
                                  const char* first_failure, void* user);

/* Random cases over n variables. Returns ONSAT_OK when everything held,
 * ONSAT_E_CHECK_FAILED when an identity failed. */
ONSAT_API onsat_status onsat_verify_random(size_t n, size_t trials, uint64_t seed,
                                           onsat_identity_fn report, void* user);
/* Every function over n <= 4 variables. */
ONSAT_API onsat_status onsat_verify_exhaustive(size_t n, onsat_identity_fn report, void* user);
/* User-supplied functions f, g and ON set (e.g. "chain: x,~y" or "x; x'"). */
ONSAT_API onsat_status onsat_verify_case(const char* f, const char* g, const char* onset,
                                         onsat_identity_fn report, void* user);

/* ---- GF(2^k) curves ---- */

typedef struct onsat_curve {
  uint32_t modulus;
  uint32_t a1, a2, a3, a4, a6;
} onsat_curve;

typedef enum onsat_curve_method {
  ONSAT_CURVE_FIELD = 0,
  ONSAT_CURVE_BOOLEAN = 1
} onsat_curve_method;

typedef void (*onsat_point_fn)(uint32_t x, uint32_t y, void* user);

/* Affine points of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 in
 * ascending order. config may be NULL. */
ONSAT_API onsat_status onsat_curve_enumerate(const onsat_curve* curve, onsat_curve_method method,
                                             const onsat_config* config, onsat_point_fn on_point,
                                             void* user, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* ONSAT_H */
