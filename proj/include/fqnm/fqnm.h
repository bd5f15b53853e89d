/* fqnm: exact integer-transfer conservation-law solver, C API.
 *
 * All functions return fqnm_status (0 on success). Handles are opaque;
 * every fqnm_*_create has a matching fqnm_*_destroy. A human-readable
 * message for the most recent failure on the calling thread is available
 * via fqnm_last_error().
 */
#ifndef FQNM_H
#define FQNM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fqnm_status {
    FQNM_OK = 0,
    FQNM_ERR_CONFIG = 1,     /* bad config file / bad argument */
    FQNM_ERR_RUNTIME = 2,    /* invariant breach during a run */
    FQNM_ERR_CFL = 3,
    FQNM_ERR_OVERFLOW = 4,
    FQNM_ERR_POSITIVITY = 5
} fqnm_status;

const char* fqnm_version(void);

/* Message for the last failing call on this thread; empty string if none. */
const char* fqnm_last_error(void);

/* ------------------------------------------------------------------ *
 * Experiment runner (drives the CLI).
 * ------------------------------------------------------------------ */

/* Runs the experiment described by the config file. out_dir_override
 * may be NULL to honor the config's out_dir key. */
fqnm_status fqnm_run_config_file(const char* config_path,
                                 const char* out_dir_override);

/* Static catalog of experiment names and accepted keys. */
const char* fqnm_experiment_catalog(void);

/* ------------------------------------------------------------------ *
 * Library surface: flux models and integer-transfer simulations.
 * ------------------------------------------------------------------ */

typedef struct fqnm_model fqnm_model;
typedef struct fqnm_sim fqnm_sim;

fqnm_status fqnm_model_create_advection(double wave_speed, fqnm_model** out);
fqnm_status fqnm_model_create_burgers(fqnm_model** out);
void fqnm_model_destroy(fqnm_model* model);

typedef enum fqnm_boundary {
    FQNM_BOUNDARY_PERIODIC = 0,
    FQNM_BOUNDARY_FIXED_EXTRAPOLATION = 1
} fqnm_boundary;

/* The simulation takes ownership of nothing; model must outlive it. */
fqnm_status fqnm_sim_create(const fqnm_model* model, size_t n_cells,
                            double domain_length, double delta, double dt,
                            fqnm_boundary boundary, fqnm_sim** out);
void fqnm_sim_destroy(fqnm_sim* sim);

/* Quantizes u (length n_cells) into the integer state. */
fqnm_status fqnm_sim_set_state(fqnm_sim* sim, const double* u, size_t n);

/* Dequantized state, written into out (length n_cells). */
fqnm_status fqnm_sim_get_state(const fqnm_sim* sim, double* out, size_t n);

/* Raw integer state, written into out (length n_cells). */
fqnm_status fqnm_sim_get_integer_state(const fqnm_sim* sim, int64_t* out, size_t n);

fqnm_status fqnm_sim_step(fqnm_sim* sim, int64_t n_steps);

fqnm_status fqnm_sim_total_mass(const fqnm_sim* sim, int64_t* out);

/* Cumulative boundary outflow ledger (zero for periodic runs). */
fqnm_status fqnm_sim_ledger(const fqnm_sim* sim, int64_t* left_outflow,
                            int64_t* right_outflow, int64_t* step_count);

/* ------------------------------------------------------------------ *
 * Oracles.
 * ------------------------------------------------------------------ */

/* Hopf-Lax entropy solution of Burgers with u0(x) = sin(2*pi*x/L). */
fqnm_status fqnm_hopf_lax_sine(double x, double t, double domain_length,
                               double* out);

#ifdef __cplusplus
}
#endif

#endif /* FQNM_H */
