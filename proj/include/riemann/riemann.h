/* C interface to the exact and approximate Riemann solvers, the ensemble
 * benchmark harness, and the 1D finite-volume driver.  All functions return
 * an rmn_status; rmn_last_error() describes the most recent failure on the
 * calling thread. */

#ifndef RIEMANN_H
#define RIEMANN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  RMN_OK = 0,
  RMN_ERR_INVALID_ARGUMENT = 1,
  RMN_ERR_DRY_STATE = 2,
  RMN_ERR_VACUUM = 3,
  RMN_ERR_NO_CONVERGENCE = 4,
  RMN_ERR_RUNTIME = 5
} rmn_status;

typedef enum { RMN_SYSTEM_SWE = 0, RMN_SYSTEM_EULER = 1 } rmn_system;

typedef enum {
  RMN_GUESS_RR = 0, /* two-rarefaction closed form */
  RMN_GUESS_AV = 1, /* arithmetic average */
  RMN_GUESS_QA = 2, /* quadratic approximation (shallow water only) */
  RMN_GUESS_PV = 3, /* primitive-variable linearization */
  RMN_GUESS_SS = 4, /* two-shock */
  RMN_GUESS_CC = 5, /* convex combination of bracket values */
  RMN_GUESS_HLLE = 6
} rmn_guess;

typedef enum {
  RMN_SCHEME_NEWTON = 0, /* positive Newton */
  RMN_SCHEME_TWO_STEP = 1,
  RMN_SCHEME_OSTROWSKI = 2,
  RMN_SCHEME_OSTROWSKI_NEWTON = 3,
  RMN_SCHEME_BOUNDING_POLYNOMIALS = 4,
  RMN_SCHEME_GOTTLIEB_GROTH = 5, /* Euler only */
  RMN_SCHEME_VAN_LEER = 6        /* Euler only */
} rmn_scheme;

typedef enum {
  RMN_TERM_RESIDUAL = 0,
  RMN_TERM_STAGNATION = 1,
  RMN_TERM_SCALED_RESIDUAL = 2
} rmn_termination;

typedef struct {
  rmn_termination mode;
  double eps_r;  /* residual tolerance */
  double eps_s;  /* stagnation tolerance */
  double eps_r1; /* scaled-residual relative part */
  double eps_r2; /* scaled-residual absolute part */
  int max_iter;
} rmn_tolerance;

void rmn_tolerance_default(rmn_tolerance* tol);

/* States are (h, u, v) for shallow water and (rho, u, p) for Euler. */
typedef struct {
  rmn_system system;
  double left[3];
  double right[3];
  double gravity;     /* shallow water, default 1 */
  double gamma_gas;   /* Euler, default 1.4 */
} rmn_problem;

void rmn_problem_default(rmn_problem* problem, rmn_system system);

typedef struct {
  double star;   /* h* or p* */
  double u_star; /* contact velocity */
  /* transverse velocity (SWE) or density (Euler) on each side of the contact */
  double left_value;
  double right_value;
  int left_is_shock;
  int right_is_shock;
  double iterations; /* half-steps count 0.5 */
  int function_evals;
  int converged;
  double final_residual;
} rmn_solve_result;

rmn_status rmn_solve(const rmn_problem* problem, rmn_guess guess, rmn_scheme scheme,
                     const rmn_tolerance* tol, rmn_solve_result* result);

/* Evaluate the similarity solution at ray xi = x/t; out holds the primitive
 * state in the same layout as rmn_problem's sides. */
rmn_status rmn_sample(const rmn_problem* problem, const rmn_solve_result* result, double xi,
                      double out[3]);

/* Tabular reports behind an opaque handle. */
typedef struct rmn_report rmn_report;

rmn_status rmn_bench_guesses(rmn_system system, size_t count, unsigned long long seed,
                             double weak_fraction, rmn_report** out);

rmn_status rmn_bench_schemes(rmn_system system, size_t count, unsigned long long seed,
                             double weak_fraction, const rmn_tolerance* tol, rmn_report** out);

typedef enum { RMN_FLUX_EXACT = 0, RMN_FLUX_ROE = 1, RMN_FLUX_HLLE = 2 } rmn_flux;
typedef enum { RMN_LIMITER_NONE = 0, RMN_LIMITER_MINMOD = 1, RMN_LIMITER_MC = 2 } rmn_limiter;
typedef enum { RMN_CASE_SWE_BLAST = 0, RMN_CASE_EULER_BLAST = 1 } rmn_case;

typedef struct {
  rmn_flux flux;
  int order; /* 1 or 2 */
  rmn_limiter limiter;
  double cfl;
  double t_end; /* <= 0: the case's default final time */
} rmn_fv_options;

void rmn_fv_options_default(rmn_fv_options* opt);

/* Report rows are the final cell states; the run summary (steps, wall time,
 * mass drift) is in the report title. */
rmn_status rmn_fv_run(rmn_case which, int cells, const rmn_fv_options* opt, rmn_report** out);

/* Self-convergence against a reference grid; one row per (grid, norm). */
rmn_status rmn_fv_converge(rmn_case which, const int* grids, size_t n_grids, int ref_cells,
                           const rmn_fv_options* opt, rmn_report** out);

/* format: "csv", "json", or "md".  *out is allocated; free with
 * rmn_string_free. */
rmn_status rmn_report_render(const rmn_report* report, const char* format, char** out);

void rmn_string_free(char* s);
void rmn_report_free(rmn_report* report);

/* Message for the calling thread's most recent failing call ("" if none). */
const char* rmn_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
