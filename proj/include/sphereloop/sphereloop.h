#ifndef SPHERELOOP_H
#define SPHERELOOP_H

/*
 * C interface to the sphereloop library.
 *
 * Every call returns an sl_status; on failure the thread-local message is
 * available from sl_last_error(). Objects are opaque handles released with
 * their *_destroy function. Strings returned through char** are owned by the
 * caller and released with sl_string_free. A NULL context means default
 * tolerances.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SPHERELOOP_BUILD)
#    define SL_API __declspec(dllexport)
#  else
#    define SL_API __declspec(dllimport)
#  endif
#else
#  define SL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sl_status {
  SL_OK = 0,
  SL_ERR_DIMENSION = 1,
  SL_ERR_DEGENERATE = 2,
  SL_ERR_DOMAIN = 3,
  SL_ERR_PRECONDITION = 4,
  SL_ERR_STRUCTURAL = 5,
  SL_ERR_GENERATOR = 6,
  SL_ERR_PARSE = 7,
  SL_ERR_INVALID_ARGUMENT = 8,
  SL_ERR_INTERNAL = 99
} sl_status;

typedef enum sl_pole { SL_POLE_IDENTITY = 0, SL_POLE_ANTIPODE = 1, SL_POLE_GENERIC = 2 } sl_pole;

typedef enum sl_curve_kind { SL_CURVE_LINE = 0, SL_CURVE_EQUI = 1 } sl_curve_kind;

typedef struct sl_context sl_context;
typedef struct sl_point sl_point;
typedef struct sl_operator sl_operator;
typedef struct sl_magma sl_magma;

SL_API const char* sl_version(void);
SL_API const char* sl_last_error(void);
SL_API const char* sl_status_name(sl_status status);
SL_API void sl_string_free(char* s);

/* Tolerances */
SL_API sl_status sl_context_create(sl_context** out);
SL_API void sl_context_destroy(sl_context* ctx);
SL_API sl_status sl_context_set_tolerances(sl_context* ctx, double eps_unit, double eps_pole, double eps_op,
                                           double eps_res);
/* out[0..3] = eps_unit, eps_pole, eps_op, eps_res */
SL_API sl_status sl_context_get_tolerances(const sl_context* ctx, double out[4]);

/* Points of the unit sphere; coordinates must have norm within 1e-6 of 1. */
SL_API sl_status sl_point_create(const sl_context* ctx, const double* coords, size_t dim, sl_point** out);
SL_API sl_status sl_point_e0(size_t dim, sl_point** out);
SL_API sl_status sl_point_minus_e0(size_t dim, sl_point** out);
SL_API void sl_point_destroy(sl_point* p);
SL_API size_t sl_point_dim(const sl_point* p);
SL_API sl_status sl_point_coords(const sl_point* p, double* out, size_t capacity);
SL_API sl_status sl_point_pole(const sl_point* p, sl_pole* out);

/* Loop operations */
SL_API sl_status sl_odot(const sl_context* ctx, const sl_point* x, const sl_point* y, sl_point** out);
SL_API sl_status sl_odot_alt(const sl_context* ctx, const sl_point* x, const sl_point* y, sl_point** out);
SL_API sl_status sl_symm(const sl_context* ctx, const sl_point* x, const sl_point* y, sl_point** out);
SL_API sl_status sl_inverse(const sl_context* ctx, const sl_point* x, sl_point** out);
SL_API sl_status sl_sqrt(const sl_context* ctx, const sl_point* x, sl_point** out);
SL_API sl_status sl_power(const sl_context* ctx, const sl_point* x, double t, sl_point** out);

/* Geometry */
SL_API sl_status sl_norm_s(const sl_point* x, double* out);
SL_API sl_status sl_dist_s(const sl_point* x, const sl_point* y, double* out);
SL_API sl_status sl_line_gamma(const sl_context* ctx, const sl_point* x, const sl_point* y, double t, sl_point** out);
SL_API sl_status sl_equi_eta(const sl_context* ctx, const sl_point* x, const sl_point* y, double t, sl_point** eta,
                             sl_point** nu);

/* Solutions of x odot a = -a^{-1}: dimension of the solution sphere and two
   verified distinct members (the second is NULL when dim = 2). */
SL_API sl_status sl_solutions(const sl_context* ctx, const sl_point* a, int* dimension, sl_point** first,
                              sl_point** second);

/* Operators (row-major) */
SL_API sl_status sl_operator_create(const double* row_major, size_t dim, sl_operator** out);
SL_API void sl_operator_destroy(sl_operator* A);
SL_API size_t sl_operator_dim(const sl_operator* A);
SL_API sl_status sl_operator_entries(const sl_operator* A, double* out, size_t capacity);
SL_API sl_status sl_left_translation(const sl_context* ctx, const sl_point* x, sl_operator** out);
SL_API sl_status sl_left_inner(const sl_context* ctx, const sl_point* x, const sl_point* y, sl_operator** out);
SL_API sl_status sl_factorize(const sl_context* ctx, const sl_operator* A, sl_point** u, sl_operator** U);

/* Finite magmas */
SL_API sl_status sl_magma_zn_reflection(int n, sl_magma** out);
SL_API sl_status sl_magma_parse(const char* text, sl_magma** out);
SL_API void sl_magma_destroy(sl_magma* m);
SL_API int sl_magma_size(const sl_magma* m);
SL_API sl_status sl_magma_to_text(const sl_magma* m, char** out);
/* x . y = x^{1/2} * (e * y) */
SL_API sl_status sl_magma_isotopy(const sl_magma* m, int e, sl_magma** out);
SL_API sl_status sl_magma_reflection_report(const sl_magma* m, char** text, int* all_hold);
SL_API sl_status sl_magma_bloop_report(const sl_magma* m, char** text, int* all_hold);

/* Drivers */
SL_API sl_status sl_verify(const char* config_json, char** report_json, int* overall_pass);
SL_API sl_status sl_curve_csv(const sl_context* ctx, sl_curve_kind kind, const sl_point* x, const sl_point* y,
                              double t0, double t1, int steps, char** csv);
/* matrix_json: array of rows. Writes {"u","U","residual"} and the residual. */
SL_API sl_status sl_factorize_json(const sl_context* ctx, const char* matrix_json, char** out_json,
                                   double* residual);

#ifdef __cplusplus
}
#endif

#endif
