#ifndef QGEO_QGEO_H
#define QGEO_QGEO_H

/* C interface to the qgeo library. Every fallible call returns a
 * qgeo_status; on failure qgeo_last_error() describes the problem (the text
 * is thread-local and valid until the next failing call on that thread).
 * Complex arrays are interleaved (re, im) doubles. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QGEO_API __declspec(dllexport)
#else
#define QGEO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qgeo_status {
  QGEO_OK = 0,
  QGEO_ERR_INVALID = 2,   /* bad argument or precondition */
  QGEO_ERR_NUMERICAL = 3, /* a numerical identity or convergence check failed */
  QGEO_ERR_IO = 4,
  QGEO_ERR_INTERNAL = 5
} qgeo_status;

typedef enum qgeo_format { QGEO_FORMAT_CSV = 0, QGEO_FORMAT_JSON = 1 } qgeo_format;

typedef struct qgeo_document qgeo_document;
typedef struct qgeo_hamiltonian qgeo_hamiltonian;

QGEO_API const char* qgeo_version(void);
QGEO_API const char* qgeo_last_error(void);

/* ---- commands ---------------------------------------------------------- */

QGEO_API qgeo_status qgeo_cmd_fig2(double omega0, double nu0, int steps, qgeo_document** out);
/* case_name: "orthogonal" or "overlapping" */
QGEO_API qgeo_status qgeo_cmd_fig3(const char* case_name, int grid, qgeo_document** out);
QGEO_API qgeo_status qgeo_cmd_scaling(int k_max, qgeo_document** out);
/* scenarios: "optimal_stationary" / "suboptimal_nonstationary" */
QGEO_API qgeo_status qgeo_cmd_table1(const char* const* scenarios, size_t count, qgeo_document** out);
QGEO_API qgeo_status qgeo_cmd_table2(qgeo_document** out);
QGEO_API qgeo_status qgeo_cmd_coupling_fix(const double* gammas, size_t count, qgeo_document** out);
QGEO_API qgeo_status qgeo_cmd_constraint_scan(int grid, qgeo_document** out);
QGEO_API qgeo_status qgeo_cmd_grover_check(const int64_t* sizes, size_t count, qgeo_document** out);

/* ---- documents --------------------------------------------------------- */

/* Adds or replaces a string parameter (e.g. the seed a run was given). */
QGEO_API qgeo_status qgeo_document_set_param(qgeo_document* doc, const char* key, const char* value);
/* Rendered text owned by the document; valid until the next render or free. */
QGEO_API qgeo_status qgeo_document_render(qgeo_document* doc, qgeo_format format, const char** text);
QGEO_API qgeo_status qgeo_document_write(qgeo_document* doc, qgeo_format format, const char* path);
QGEO_API size_t qgeo_document_row_count(const qgeo_document* doc);
QGEO_API void qgeo_document_free(qgeo_document* doc);

/* ---- Hamiltonians ------------------------------------------------------ */

/* Source and target are length-`dim` complex vectors; they are normalized. */
QGEO_API qgeo_status qgeo_hamiltonian_fg(const double* source, const double* target, size_t dim, double energy,
                                         qgeo_hamiltonian** out);
QGEO_API qgeo_status qgeo_hamiltonian_fenner(const double* source, const double* target, size_t dim,
                                             double energy, qgeo_hamiltonian** out);
QGEO_API qgeo_status qgeo_hamiltonian_opt(const double* a, const double* b, size_t dim, double dispersion,
                                          qgeo_hamiltonian** out);
QGEO_API qgeo_status qgeo_hamiltonian_uzdin(double omega0, double nu0, qgeo_hamiltonian** out);
QGEO_API qgeo_status qgeo_hamiltonian_coupled_schedule(double gamma, qgeo_hamiltonian** out);

QGEO_API size_t qgeo_hamiltonian_dim(const qgeo_hamiltonian* h);
/* Time domain; stationary generators report [0, +inf). */
QGEO_API qgeo_status qgeo_hamiltonian_domain(const qgeo_hamiltonian* h, double* t0, double* t1);
/* Row-major dim x dim complex matrix H(t) written to `out` (2 dim^2 doubles). */
QGEO_API qgeo_status qgeo_hamiltonian_matrix(const qgeo_hamiltonian* h, double t, double* out);
/* Evolves psi0 (normalized) to time t. Stationary generators are
 * exponentiated exactly; time-dependent ones step from t0 to t with step dt
 * (dt <= 0 picks a default). */
QGEO_API qgeo_status qgeo_evolve(const qgeo_hamiltonian* h, const double* psi0, double t, double dt, double* psi_out);
/* Minimum gap of a time-dependent generator over `points` samples. */
QGEO_API qgeo_status qgeo_min_gap(const qgeo_hamiltonian* h, size_t points, double* g_min, double* arg_min);
QGEO_API void qgeo_hamiltonian_free(qgeo_hamiltonian* h);

/* ---- closed forms ------------------------------------------------------ */

QGEO_API qgeo_status qgeo_prob_fg(double x, double energy, double t, double* out);
QGEO_API qgeo_status qgeo_prob_fenner(double x, double energy, double t, double* out);
QGEO_API qgeo_status qgeo_characteristic_times(double x, double energy, double* t_fg, double* t_fenner,
                                               double* t_opt);
QGEO_API qgeo_status qgeo_equal_dispersion_ratio(double x, double* out);
QGEO_API qgeo_status qgeo_fidelity(const double* a, const double* b, size_t dim, double* out);
QGEO_API qgeo_status qgeo_grover_equivalence(int n, double* out);
QGEO_API qgeo_status qgeo_epsilon_residual(double epsilon, double* out);

#ifdef __cplusplus
}
#endif

#endif /* QGEO_QGEO_H */
