/* C interface to the diatomic lattice wave library. */
#ifndef DIATOMIC_H
#define DIATOMIC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dw_status {
  DW_OK = 0,
  DW_INVALID_ARGUMENT = 1,
  DW_CONFIG_ERROR = 2,
  DW_NUMERICAL_ERROR = 3,
  DW_IO_ERROR = 4,
  DW_INTERNAL = 5
} dw_status;

/* Message of the last failed call on this thread ("" when none). */
const char* dw_last_error(void);

typedef struct dw_dispersion dw_dispersion;

typedef struct dw_constants {
  double gamma1, gamma2;
  double c, q;
  double p_star, c_star, q_star;
  double omega_max;
} dw_constants;

dw_status dw_dispersion_create(double gamma1, double gamma2, dw_dispersion** out);
/* Physical masses, spring constant, lattice step and length scale; h_out (may be NULL) receives d/L. */
dw_status dw_dispersion_from_masses(double m1, double m2, double K, double d, double L, dw_dispersion** out,
                                    double* h_out);
dw_status dw_dispersion_constants(const dw_dispersion* d, dw_constants* out);
/* branch 1 (acoustic) or 2 (optical). */
dw_status dw_dispersion_omega(const dw_dispersion* d, int branch, double p, double* out);
void dw_dispersion_destroy(dw_dispersion* d);

dw_status dw_airy(double z, double* ai, double* ai_prime);

typedef struct dw_scenario dw_scenario;

typedef struct dw_scenario_info {
  double h, mu, delta;
  double ratio; /* h^2 / mu^3 */
  int regime;   /* 0 weak dispersion, 1 wave equation, 2 outside band */
} dw_scenario_info;

typedef void (*dw_message_fn)(const char* line, void* user);

dw_status dw_scenario_load(const char* config_path, dw_scenario** out);
dw_status dw_scenario_load_text(const char* config_text, dw_scenario** out);
dw_status dw_scenario_info_get(const dw_scenario* s, dw_scenario_info* out);
/* Overrides [output] dir; NULL keeps the configured one. */
dw_status dw_scenario_set_output(dw_scenario* s, const char* dir);
dw_status dw_scenario_set_threads(dw_scenario* s, int threads);
dw_status dw_scenario_run_dispersion(dw_scenario* s, dw_message_fn fn, void* user);
dw_status dw_scenario_run_simulate(dw_scenario* s, dw_message_fn fn, void* user);
dw_status dw_scenario_run_compare(dw_scenario* s, dw_message_fn fn, void* user);
/* Evaluates a registry method at time t on x[0..n); u and v receive n values each.
   For method "ode" the lattice sites must be requested explicitly: x values that are not sites get NaN. */
dw_status dw_scenario_evaluate(const dw_scenario* s, const char* method, double t, const double* x, size_t n,
                               double* u, double* v);
void dw_scenario_destroy(dw_scenario* s);

#ifdef __cplusplus
}
#endif

#endif
