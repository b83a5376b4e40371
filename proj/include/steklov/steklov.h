// Copyright 2026 The steklov-shells Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the steklov-shells library.
 *
 * Every fallible call returns an stk_status. On failure a message is kept in
 * thread-local storage and can be read with stk_last_error() until the next
 * failing call on the same thread. Output pointers are written only on
 * success unless stated otherwise. Strings returned through char** belong to
 * the caller and are released with stk_string_free().
 */
#ifndef STEKLOV_STEKLOV_H
#define STEKLOV_STEKLOV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define STK_API __declspec(dllexport)
#else
#define STK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stk_status {
  STK_OK = 0,
  STK_ERR_ARGUMENT = 1,    /* null pointer, unknown name, bad enum value */
  STK_ERR_DOMAIN = 2,      /* value outside the operation's domain */
  STK_ERR_UNSUPPORTED = 3, /* needs constant curvature or another family property */
  STK_ERR_CONVERGENCE = 4, /* quadrature depth limit reached */
  STK_ERR_NUMERIC = 5,     /* root finding, SVD or spectral scan failed */
  STK_ERR_INVARIANT = 6,   /* a quantity that must hold was observed violated */
  STK_ERR_IO = 7,
  STK_ERR_INTERNAL = 99
} stk_status;

STK_API const char* stk_last_error(void);
STK_API const char* stk_status_name(stk_status status);
STK_API const char* stk_version(void);
STK_API void stk_string_free(char* text);

/* ---- model spaces ---------------------------------------------------- */

typedef struct stk_space stk_space;

/* family: euclidean, sphere, rp, cp, hp, op2, rh, ch, hh, oh2 (any case).
 * dim is m for euclidean/sphere and n otherwise (2 for op2/oh2). */
STK_API stk_status stk_space_create(const char* family, int dim, stk_space** out);
STK_API void stk_space_destroy(stk_space* space);

typedef struct stk_space_info {
  const char* name; /* static string, e.g. "cp" */
  int n;
  int m; /* real dimension */
  int k; /* 1, 2, 4 or 8 */
  int compact;
  int constant_curvature;
  int curvature;   /* -1, 0 or 1; 0 also when not constant_curvature */
  int inj_bounded; /* 0: injectivity radius is infinite */
  double inj;      /* valid when inj_bounded */
} stk_space_info;

STK_API stk_status stk_space_get_info(const stk_space* space, stk_space_info* out);
STK_API stk_status stk_density(const stk_space* space, double r, double* out);
STK_API stk_status stk_density_derivative(const stk_space* space, double r, double* out);
/* Largest admissible outer radius, inj/2. *bounded = 0 when unbounded. */
STK_API stk_status stk_max_outer_radius(const stk_space* space, int* bounded, double* value);
STK_API stk_status stk_unit_sphere_area(int m, double* out);

/* ---- quadrature ------------------------------------------------------ */

typedef struct stk_quad_config {
  int rule_order;
  double abs_tol;
  double rel_tol;
  int max_depth;
} stk_quad_config;

STK_API stk_quad_config stk_quad_config_default(void);

typedef double (*stk_integrand)(double x, void* user);

/* Adaptive Gauss-Legendre. cfg may be NULL for the defaults. On
 * STK_ERR_CONVERGENCE, *value and *error hold the best estimate. */
STK_API stk_status stk_integrate(stk_integrand f, void* user, double a, double b,
                                 const stk_quad_config* cfg, double* value, double* error);

/* Nodes and weights on [-1, 1]; both arrays need `order` entries. */
STK_API stk_status stk_gauss_legendre(int order, double* nodes, double* weights);

/* ---- radial profiles ------------------------------------------------- */

STK_API stk_status stk_sigma1_concentric(const stk_space* space, double r1, double r2,
                                         const stk_quad_config* cfg, double* out);
/* Steklov eigenvalue of the mode-l radial factor; ode_step <= 0 picks the default. */
STK_API stk_status stk_radial_mode_sigma(const stk_space* space, double r1, double r2, int l,
                                         double ode_step, double* out);
/* sigmas needs l_max + 1 entries. */
STK_API stk_status stk_mode_ordering(const stk_space* space, double r1, double r2, int l_max,
                                     double ode_step, double* sigmas, int* first_is_smallest,
                                     int* strictly_increasing);

/* ---- geodesic triangles (curvature -1, 0 or 1) ------------------------ */

STK_API stk_status stk_side_from_sas(int curvature, double q, double r, double angle,
                                     double* side, int* collinear);
STK_API stk_status stk_angle_from_sss(int curvature, double p, double q, double r, double* angle);
STK_API stk_status stk_boundary_distance(int curvature, double d, double r2, double theta,
                                         double* rho);
STK_API stk_status stk_acute_angle_check(int curvature, int samples, uint64_t seed, int* ok);
STK_API stk_status stk_chord_symmetry_check(int curvature, double d, double r2, int samples,
                                            uint64_t seed, int* ok);

/* ---- shell functionals ----------------------------------------------- */

typedef struct stk_record {
  double d;
  double N;
  double D;
  double D_alt;
  double Q;
  double sigma1_concentric;
  double newton_residual;
  double quad_err;
} stk_record;

STK_API stk_status stk_rayleigh(const stk_space* space, double r1, double r2, double d,
                                const stk_quad_config* cfg, stk_record* out);
STK_API stk_status stk_newton_residual(const stk_space* space, double r2, double x,
                                       const stk_quad_config* cfg, double* out);
STK_API stk_status stk_cap_measure_compare(const stk_space* space, double r2, double d, double s,
                                           double* left, double* right, int* ok);
STK_API stk_status stk_omega_asymmetry(const stk_space* space, double r2, const double* s,
                                       size_t count, int* ok);

typedef struct stk_sweep stk_sweep;

typedef struct stk_sweep_flags {
  int complete;
  int d_increasing;
  int n_bounded;
  int q_bounded;
  int q_monotone; /* diagnostic only */
} stk_sweep_flags;

typedef enum stk_format { STK_FORMAT_CSV = 0, STK_FORMAT_JSON = 1 } stk_format;

/* `steps` uniform displacements on [0, 0.95 (R2 - R1)]; out needs `steps` entries. */
STK_API stk_status stk_default_d_grid(double r1, double r2, int steps, double* out);
/* Per-displacement failures are stored in the sweep, not returned here. */
STK_API stk_status stk_sweep_run(const stk_space* space, double r1, double r2, const double* d,
                                 size_t count, const stk_quad_config* cfg, int threads,
                                 stk_sweep** out);
STK_API size_t stk_sweep_size(const stk_sweep* sweep);
/* Returns STK_ERR_NUMERIC for a failed entry;
 * *error then points to its message, owned by the sweep. */
STK_API stk_status stk_sweep_record(const stk_sweep* sweep, size_t index, stk_record* out,
                                    const char** error);
STK_API stk_status stk_sweep_get_flags(const stk_sweep* sweep, stk_sweep_flags* out);
/* with_flags appends the per-row `flags` column. */
STK_API stk_status stk_sweep_render(const stk_sweep* sweep, stk_format format, int with_flags,
                                    char** text);
STK_API stk_status stk_sweep_write(const stk_sweep* sweep, const char* path, stk_format format,
                                   int with_flags);
STK_API void stk_sweep_destroy(stk_sweep* sweep);

/* ---- planar eccentric annulus ---------------------------------------- */

typedef struct stk_mps_config {
  int basis_order;
  int collocation_factor;
  double sigma_low; /* both <= 0: default bracket */
  double sigma_high;
  int scan_points;
  double refine_tol;
  int threads;
} stk_mps_config;

STK_API stk_mps_config stk_mps_config_default(void);

typedef struct stk_mps_result stk_mps_result;

typedef struct stk_mps_summary {
  double sigma; /* NaN when no minimum was found */
  double min_singular_value;
  double column_norm_ratio;
  int basis_order;
  int ill_conditioned;
  size_t trace_size;
} stk_mps_summary;

/* When the scan finds no minimum the call returns STK_ERR_NUMERIC but still
 * sets *out to a result that carries the scan trace. */
STK_API stk_status stk_mps_solve(double r1, double r2, double d, const stk_mps_config* cfg,
                                 stk_mps_result** out);
STK_API stk_status stk_mps_get_summary(const stk_mps_result* result, stk_mps_summary* out);
STK_API stk_status stk_mps_trace_point(const stk_mps_result* result, size_t index, double* sigma,
                                       double* singular_value);
/* CSV `sigma,singular_value`. */
STK_API stk_status stk_mps_render_trace(const stk_mps_result* result, char** text);
STK_API void stk_mps_result_destroy(stk_mps_result* result);

STK_API stk_status stk_concentric_planar_sigma(double r1, double r2, double* out);
/* Column-major rows x cols matrix, rows >= cols. */
STK_API stk_status stk_smallest_singular_value(const double* matrix, size_t rows, size_t cols,
                                               double* out);

/* ---- property suite -------------------------------------------------- */

typedef struct stk_verify_options {
  uint64_t seed;
  int fast;
  int threads;
} stk_verify_options;

STK_API stk_verify_options stk_verify_options_default(void);
/* Report CSV `check,status,detail`; *all_passed is 0 when any check failed. */
STK_API stk_status stk_verify(const stk_verify_options* options, char** report, int* all_passed);

/* Formats with 17 significant digits into buf (NUL-terminated). */
STK_API stk_status stk_format_number(double x, char* buf, size_t size);

#ifdef __cplusplus
}
#endif

#endif /* STEKLOV_STEKLOV_H */
