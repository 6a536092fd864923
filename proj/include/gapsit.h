/* gapsit: excitation spectrum of two-level atoms in a frequency gap medium.
 *
 * C API over the C++ core.  All entry points are thread-safe as long as
 * each gapsit_model handle is treated as immutable after creation (the
 * library never mutates a model).  Errors are reported as status codes;
 * gapsit_last_error_message() returns a thread-local description of the
 * most recent failure on the calling thread.
 */
#ifndef GAPSIT_H
#define GAPSIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gapsit_model gapsit_model; /* opaque */

typedef enum gapsit_status {
    GAPSIT_OK = 0,
    GAPSIT_ERR_VALIDATION = 1,
    GAPSIT_ERR_POLE = 2,
    GAPSIT_ERR_EDGE = 3,
    GAPSIT_ERR_OUT_OF_GAP = 4,
    GAPSIT_ERR_OUT_OF_BAND = 5,
    GAPSIT_ERR_RANGE = 6,
    GAPSIT_ERR_RESONANCE = 7,
    GAPSIT_ERR_NO_CONVERGENCE = 8,
    GAPSIT_ERR_NO_SIGN_CHANGE = 9,
    GAPSIT_ERR_SINGULAR_JACOBIAN = 10,
    GAPSIT_ERR_BAND_ESCAPE = 11,
    GAPSIT_ERR_MAPPING = 12,
    GAPSIT_ERR_NC_VIOLATION = 13,
    GAPSIT_ERR_ZERO_VELOCITY = 14,
    GAPSIT_ERR_DERIVATIVE_OVERFLOW = 15,
    GAPSIT_ERR_INTERNAL = 16
} gapsit_status;

typedef enum gapsit_band {
    GAPSIT_BAND_LOWER = 0,
    GAPSIT_BAND_GAP = 1,
    GAPSIT_BAND_UPPER = 2
} gapsit_band;

typedef enum gapsit_halfplane {
    GAPSIT_HALFPLANE_UPPER = 0,
    GAPSIT_HALFPLANE_LOWER = 1
} gapsit_halfplane;

typedef enum gapsit_format {
    GAPSIT_FORMAT_CSV = 0,
    GAPSIT_FORMAT_JSON = 1
} gapsit_format;

const char* gapsit_version(void);
const char* gapsit_status_name(gapsit_status status);

/* Thread-local message for the last failed call on this thread. */
const char* gapsit_last_error_message(void);

/* ---- model lifecycle ------------------------------------------------- */

/* Creates a model from a JSON configuration document (all fields
 * optional; see README for the schema).  On success *out owns the handle;
 * release it with gapsit_model_destroy. */
gapsit_status gapsit_model_create_json(const char* json_text, gapsit_model** out);

void gapsit_model_destroy(gapsit_model* model);

/* Canonical JSON echo of the model's configuration.  Free with
 * gapsit_string_free. */
gapsit_status gapsit_model_config_json(const gapsit_model* model, char** out_text);

void gapsit_string_free(char* text);

/* ---- medium ----------------------------------------------------------- */

gapsit_status gapsit_permeability(const gapsit_model* model, double omega_re,
                                  double omega_im, double* out_re, double* out_im);

gapsit_status gapsit_refractive_index(const gapsit_model* model, double omega_re,
                                      double omega_im, gapsit_halfplane side,
                                      double* out_re, double* out_im);

gapsit_status gapsit_nu(const gapsit_model* model, double xi, double* out);

gapsit_status gapsit_wavenumber(const gapsit_model* model, double omega_re,
                                double omega_im, gapsit_halfplane side,
                                double* out_re, double* out_im);

gapsit_status gapsit_kappa(const gapsit_model* model, double xi, double* out);
gapsit_status gapsit_kappa_prime(const gapsit_model* model, double xi, double* out);

gapsit_status gapsit_form_factor(const gapsit_model* model, double omega,
                                 double* out);

gapsit_status gapsit_classify(const gapsit_model* model, double xi,
                              gapsit_band* out);

/* ---- rapidity --------------------------------------------------------- */

gapsit_status gapsit_rapidity(const gapsit_model* model, double omega_re,
                              double omega_im, gapsit_halfplane side,
                              double* out_re, double* out_im);

gapsit_status gapsit_rapidity_derivative(const gapsit_model* model, double xi,
                                         double* out);

gapsit_status gapsit_phi(const gapsit_model* model, double xi, double* out);

gapsit_status gapsit_taylor_ab(const gapsit_model* model, double* out_a,
                               double* out_b);

gapsit_status gapsit_invert_rapidity(const gapsit_model* model, double H,
                                     gapsit_band band, double* out_xi);

/* ---- strings ----------------------------------------------------------- */

/* Rapidities of the n-member string with carrying rapidity H; arrays of
 * length n. */
gapsit_status gapsit_build_string(const gapsit_model* model, double H, int n,
                                  double* h_re, double* h_im);

/* Image of a string centered at the real band frequency xi_center.
 * Arrays of length n; any output pointer may be NULL.  *nc_ok is 1 when
 * every member satisfies the necessary sign condition. */
gapsit_status gapsit_string_image_at(const gapsit_model* model, double xi_center,
                                     int n, double* omega_re, double* omega_im,
                                     double* k_re, double* k_im, int* nc_ok,
                                     double* eigenenergy);

/* Bethe-equation residual magnitudes (cumulative per-particle form);
 * array of length n. */
gapsit_status gapsit_bae_residuals_at(const gapsit_model* model, double xi_center,
                                      int n, double* residual_abs);

/* Pair equations for the j-th of l confined pairs. */
gapsit_status gapsit_solve_pair_params(const gapsit_model* model, double H, int l,
                                       int j, double* out_xi, double* out_eta,
                                       double* out_residual);

gapsit_status gapsit_approx_pair_params(const gapsit_model* model, double H, int l,
                                        int j, double* out_xi, double* out_eta);

/* ---- solitons ----------------------------------------------------------- */

gapsit_status gapsit_vacuum_dispersion(const gapsit_model* model, double Omega,
                                       double K, int n, double* out_Q);

gapsit_status gapsit_vacuum_inverse_velocity(const gapsit_model* model,
                                             double Omega, int n, double* out);

gapsit_status gapsit_vacuum_soliton_size(const gapsit_model* model, int n,
                                         double* out);

gapsit_status gapsit_ordinary_dispersion(const gapsit_model* model, double xi,
                                         int n, double* out_q);

gapsit_status gapsit_ordinary_inverse_velocity(const gapsit_model* model, double xi,
                                               int n, double* out_inv_V,
                                               double* out_inv_v);

/* Band data for l pairs.  Any output pointer may be NULL. */
gapsit_status gapsit_gap_band(const gapsit_model* model, int l,
                              double* center_closed, double* center_direct,
                              double* width, double* mass,
                              double* kappa_prime_mean);

/* eps_l(q); *valid is 1 while q^2/2m stays within the band width. */
gapsit_status gapsit_gap_energy(const gapsit_model* model, int l, double q,
                                double* out_eps, int* valid);

gapsit_status gapsit_gap_dispersion_inside(const gapsit_model* model, int l,
                                           double eps_l, double H, double* out_Q);

/* *superluminal is 1 when the bracket drops to <= 0. */
gapsit_status gapsit_gap_velocity_ratio(const gapsit_model* model, int l, double H,
                                        double* out_inv_V, double* out_inv_v,
                                        double* out_bracket, int* superluminal);

gapsit_status gapsit_pair_size(const gapsit_model* model, double xi, double* out);

/* Composite construction.  omega/k arrays have length n (string order),
 * pair arrays length n_gap_pairs; any output pointer may be NULL.
 * *xi_minus is NaN when the ordinary part is empty. */
gapsit_status gapsit_build_composite(const gapsit_model* model, double H, int n,
                                     int n_gap_pairs, double* omega_re,
                                     double* omega_im, double* k_re, double* k_im,
                                     double* pair_xi, double* pair_eta,
                                     double* pair_residual, double* xi_minus,
                                     double* eigenenergy);

/* ---- table commands ----------------------------------------------------- */

/* Each command renders its full report in the requested format; the
 * returned text must be freed with gapsit_string_free.  cmd_string
 * returns GAPSIT_ERR_NC_VIOLATION (with the report still produced) when
 * the necessary condition fails. */
gapsit_status gapsit_cmd_medium(const gapsit_model* model, gapsit_format format,
                                char** out_text);
gapsit_status gapsit_cmd_string(const gapsit_model* model, double H, int n,
                                gapsit_format format, char** out_text);
gapsit_status gapsit_cmd_ordinary(const gapsit_model* model, int n,
                                  gapsit_format format, char** out_text);
gapsit_status gapsit_cmd_gap(const gapsit_model* model, int l_max, double H,
                             gapsit_format format, char** out_text);
gapsit_status gapsit_cmd_composite(const gapsit_model* model, double H, int n,
                                   int n_gap_pairs, gapsit_format format,
                                   char** out_text);
gapsit_status gapsit_cmd_vacuum(const gapsit_model* model, int n,
                                gapsit_format format, char** out_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GAPSIT_H */
