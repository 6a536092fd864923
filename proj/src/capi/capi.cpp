#include "gapsit.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "../core/model.hpp"
#include "../core/tables.hpp"

struct gapsit_model {
    std::unique_ptr<gapsit::Model> impl;
};

namespace {

thread_local std::string g_last_error;

gapsit_status to_status(gapsit::ErrorCode code) {
    using EC = gapsit::ErrorCode;
    switch (code) {
        case EC::Ok: return GAPSIT_OK;
        case EC::Validation: return GAPSIT_ERR_VALIDATION;
        case EC::Pole: return GAPSIT_ERR_POLE;
        case EC::Edge: return GAPSIT_ERR_EDGE;
        case EC::OutOfGap: return GAPSIT_ERR_OUT_OF_GAP;
        case EC::OutOfBand: return GAPSIT_ERR_OUT_OF_BAND;
        case EC::Range: return GAPSIT_ERR_RANGE;
        case EC::Resonance: return GAPSIT_ERR_RESONANCE;
        case EC::NoConvergence: return GAPSIT_ERR_NO_CONVERGENCE;
        case EC::NoSignChange: return GAPSIT_ERR_NO_SIGN_CHANGE;
        case EC::SingularJacobian: return GAPSIT_ERR_SINGULAR_JACOBIAN;
        case EC::BandEscape: return GAPSIT_ERR_BAND_ESCAPE;
        case EC::Mapping: return GAPSIT_ERR_MAPPING;
        case EC::NcViolation: return GAPSIT_ERR_NC_VIOLATION;
        case EC::ZeroVelocity: return GAPSIT_ERR_ZERO_VELOCITY;
        case EC::DerivativeOverflow: return GAPSIT_ERR_DERIVATIVE_OVERFLOW;
        case EC::Internal: return GAPSIT_ERR_INTERNAL;
    }
    return GAPSIT_ERR_INTERNAL;
}

template <typename F>
gapsit_status wrap(F&& body) {
    try {
        body();
        return GAPSIT_OK;
    } catch (const gapsit::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GAPSIT_ERR_INTERNAL;
    }
}

const gapsit::Model& model_ref(const gapsit_model* model) {
    if (!model || !model->impl)
        throw gapsit::ValidationError("null model handle");
    return *model->impl;
}

gapsit::HalfPlane to_side(gapsit_halfplane side) {
    return side == GAPSIT_HALFPLANE_UPPER ? gapsit::HalfPlane::Upper
                                          : gapsit::HalfPlane::Lower;
}

gapsit::Band to_band(gapsit_band band) {
    switch (band) {
        case GAPSIT_BAND_LOWER: return gapsit::Band::LowerBranch;
        case GAPSIT_BAND_GAP: return gapsit::Band::Gap;
        case GAPSIT_BAND_UPPER: return gapsit::Band::UpperBranch;
    }
    throw gapsit::ValidationError("invalid band enum value");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void store_complex(gapsit::Complex v, double* re, double* im) {
    if (re) *re = v.real();
    if (im) *im = v.imag();
}

gapsit::OutputFormat to_format(gapsit_format f) {
    return f == GAPSIT_FORMAT_CSV ? gapsit::OutputFormat::Csv
                                  : gapsit::OutputFormat::Json;
}

} // namespace

extern "C" {

const char* gapsit_version(void) { return "1.0.0"; }

const char* gapsit_status_name(gapsit_status status) {
    switch (status) {
        case GAPSIT_OK: return "ok";
        case GAPSIT_ERR_VALIDATION: return "validation";
        case GAPSIT_ERR_POLE: return "pole";
        case GAPSIT_ERR_EDGE: return "edge";
        case GAPSIT_ERR_OUT_OF_GAP: return "out-of-gap";
        case GAPSIT_ERR_OUT_OF_BAND: return "out-of-band";
        case GAPSIT_ERR_RANGE: return "range";
        case GAPSIT_ERR_RESONANCE: return "resonance";
        case GAPSIT_ERR_NO_CONVERGENCE: return "no-convergence";
        case GAPSIT_ERR_NO_SIGN_CHANGE: return "no-sign-change";
        case GAPSIT_ERR_SINGULAR_JACOBIAN: return "singular-jacobian";
        case GAPSIT_ERR_BAND_ESCAPE: return "band-escape";
        case GAPSIT_ERR_MAPPING: return "mapping";
        case GAPSIT_ERR_NC_VIOLATION: return "nc-violation";
        case GAPSIT_ERR_ZERO_VELOCITY: return "zero-velocity";
        case GAPSIT_ERR_DERIVATIVE_OVERFLOW: return "derivative-overflow";
        case GAPSIT_ERR_INTERNAL: return "internal";
    }
    return "?";
}

const char* gapsit_last_error_message(void) { return g_last_error.c_str(); }

gapsit_status gapsit_model_create_json(const char* json_text, gapsit_model** out) {
    return wrap([&] {
        if (!json_text || !out)
            throw gapsit::ValidationError("model_create_json: null argument");
        auto handle = std::make_unique<gapsit_model>();
        handle->impl = std::make_unique<gapsit::Model>(
            gapsit::parse_config(json_text));
        *out = handle.release();
    });
}

void gapsit_model_destroy(gapsit_model* model) { delete model; }

gapsit_status gapsit_model_config_json(const gapsit_model* model, char** out_text) {
    return wrap([&] {
        if (!out_text) throw gapsit::ValidationError("null output pointer");
        *out_text = dup_string(gapsit::config_to_json(model_ref(model).config()));
    });
}

void gapsit_string_free(char* text) { std::free(text); }

gapsit_status gapsit_permeability(const gapsit_model* model, double omega_re,
                                  double omega_im, double* out_re, double* out_im) {
    return wrap([&] {
        store_complex(model_ref(model).medium().permeability({omega_re, omega_im}),
                      out_re, out_im);
    });
}

gapsit_status gapsit_refractive_index(const gapsit_model* model, double omega_re,
                                      double omega_im, gapsit_halfplane side,
                                      double* out_re, double* out_im) {
    return wrap([&] {
        store_complex(model_ref(model).medium().refractive_index(
                          {omega_re, omega_im}, to_side(side)),
                      out_re, out_im);
    });
}

gapsit_status gapsit_nu(const gapsit_model* model, double xi, double* out) {
    return wrap([&] { *out = model_ref(model).medium().nu(xi); });
}

gapsit_status gapsit_wavenumber(const gapsit_model* model, double omega_re,
                                double omega_im, gapsit_halfplane side,
                                double* out_re, double* out_im) {
    return wrap([&] {
        store_complex(model_ref(model).medium().wavenumber({omega_re, omega_im},
                                                           to_side(side)),
                      out_re, out_im);
    });
}

gapsit_status gapsit_kappa(const gapsit_model* model, double xi, double* out) {
    return wrap([&] { *out = model_ref(model).medium().kappa(xi); });
}

gapsit_status gapsit_kappa_prime(const gapsit_model* model, double xi, double* out) {
    return wrap([&] { *out = model_ref(model).medium().kappa_prime(xi); });
}

gapsit_status gapsit_form_factor(const gapsit_model* model, double omega,
                                 double* out) {
    return wrap([&] {
        const gapsit::Model& m = model_ref(model);
        *out = m.medium().form_factor(omega, m.config().atoms.omega12);
    });
}

gapsit_status gapsit_classify(const gapsit_model* model, double xi,
                              gapsit_band* out) {
    return wrap([&] {
        switch (model_ref(model).medium().classify(xi)) {
            case gapsit::Band::LowerBranch: *out = GAPSIT_BAND_LOWER; break;
            case gapsit::Band::Gap: *out = GAPSIT_BAND_GAP; break;
            case gapsit::Band::UpperBranch: *out = GAPSIT_BAND_UPPER; break;
        }
    });
}

gapsit_status gapsit_rapidity(const gapsit_model* model, double omega_re,
                              double omega_im, gapsit_halfplane side,
                              double* out_re, double* out_im) {
    return wrap([&] {
        store_complex(model_ref(model).rapidity().value({omega_re, omega_im},
                                                        to_side(side)),
                      out_re, out_im);
    });
}

gapsit_status gapsit_rapidity_derivative(const gapsit_model* model, double xi,
                                         double* out) {
    return wrap([&] { *out = model_ref(model).rapidity().derivative(xi); });
}

gapsit_status gapsit_phi(const gapsit_model* model, double xi, double* out) {
    return wrap([&] { *out = model_ref(model).rapidity().phi(xi); });
}

gapsit_status gapsit_taylor_ab(const gapsit_model* model, double* out_a,
                               double* out_b) {
    return wrap([&] {
        const gapsit::TaylorAB ab = model_ref(model).rapidity().taylor_ab();
        if (out_a) *out_a = ab.a;
        if (out_b) *out_b = ab.b;
    });
}

gapsit_status gapsit_invert_rapidity(const gapsit_model* model, double H,
                                     gapsit_band band, double* out_xi) {
    return wrap([&] {
        *out_xi = model_ref(model).rapidity().invert(H, to_band(band));
    });
}

gapsit_status gapsit_build_string(const gapsit_model* model, double H, int n,
                                  double* h_re, double* h_im) {
    return wrap([&] {
        const gapsit::BetheString s =
            gapsit::build_string(H, n, model_ref(model).config().atoms.beta);
        for (int j = 0; j < n; ++j) {
            if (h_re) h_re[j] = s.rapidities[static_cast<size_t>(j)].real();
            if (h_im) h_im[j] = s.rapidities[static_cast<size_t>(j)].imag();
        }
    });
}

gapsit_status gapsit_string_image_at(const gapsit_model* model, double xi_center,
                                     int n, double* omega_re, double* omega_im,
                                     double* k_re, double* k_im, int* nc_ok,
                                     double* eigenenergy) {
    return wrap([&] {
        const gapsit::Model& m = model_ref(model);
        const gapsit::SolitonImage img =
            gapsit::band_string_image(xi_center, n, m.rapidity());
        for (int j = 0; j < n; ++j) {
            const size_t u = static_cast<size_t>(j);
            if (omega_re) omega_re[j] = img.frequencies[u].real();
            if (omega_im) omega_im[j] = img.frequencies[u].imag();
            if (k_re) k_re[j] = img.momenta[u].real();
            if (k_im) k_im[j] = img.momenta[u].imag();
        }
        if (nc_ok) *nc_ok = gapsit::check_nc(img).ok ? 1 : 0;
        if (eigenenergy) *eigenenergy = img.eigenenergy;
    });
}

gapsit_status gapsit_bae_residuals_at(const gapsit_model* model, double xi_center,
                                      int n, double* residual_abs) {
    return wrap([&] {
        const gapsit::Model& m = model_ref(model);
        const gapsit::SolitonImage img =
            gapsit::band_string_image(xi_center, n, m.rapidity());
        const auto res = gapsit::bae_residuals(img, m.rapidity());
        for (int j = 0; j < n; ++j)
            if (residual_abs) residual_abs[j] = std::abs(res[static_cast<size_t>(j)]);
    });
}

gapsit_status gapsit_solve_pair_params(const gapsit_model* model, double H, int l,
                                       int j, double* out_xi, double* out_eta,
                                       double* out_residual) {
    return wrap([&] {
        const gapsit::PairParams p =
            gapsit::solve_pair_params(H, l, j, model_ref(model).rapidity());
        if (out_xi) *out_xi = p.xi;
        if (out_eta) *out_eta = p.eta;
        if (out_residual) *out_residual = p.residual;
    });
}

gapsit_status gapsit_approx_pair_params(const gapsit_model* model, double H, int l,
                                        int j, double* out_xi, double* out_eta) {
    return wrap([&] {
        const gapsit::Model& m = model_ref(model);
        const gapsit::PairParams p = gapsit::approx_pair_params(
            H, l, j, m.rapidity().taylor_ab(), m.config().atoms);
        if (out_xi) *out_xi = p.xi;
        if (out_eta) *out_eta = p.eta;
    });
}

gapsit_status gapsit_vacuum_dispersion(const gapsit_model* model, double Omega,
                                       double K, int n, double* out_Q) {
    return wrap([&] {
        *out_Q = gapsit::vacuum_dispersion(Omega, K, n,
                                           model_ref(model).config().atoms);
    });
}

gapsit_status gapsit_vacuum_inverse_velocity(const gapsit_model* model,
                                             double Omega, int n, double* out) {
    return wrap([&] {
        const gapsit::Model& m = model_ref(model);
        *out = gapsit::vacuum_inverse_velocity(Omega, n, m.config().atoms,
                                               m.config().medium.c);
    });
}

gapsit_status gapsit_vacuum_soliton_size(const gapsit_model* model, int n,
                                         double* out) {
    return wrap([&] {
        *out = gapsit::vacuum_soliton_size(n, model_ref(model).config().atoms);
    });
}

gapsit_status gapsit_ordinary_dispersion(const gapsit_model* model, double xi,
                                         int n, double* out_q) {
    return wrap([&] {
        *out_q = gapsit::ordinary_dispersion(xi, n, model_ref(model).rapidity());
    });
}

gapsit_status gapsit_ordinary_inverse_velocity(const gapsit_model* model, double xi,
                                               int n, double* out_inv_V,
                                               double* out_inv_v) {
    return wrap([&] {
        const gapsit::OrdinaryVelocity v =
            gapsit::ordinary_inverse_velocity(xi, n, model_ref(model).rapidity());
        if (out_inv_V) *out_inv_V = v.inv_V;
        if (out_inv_v) *out_inv_v = v.inv_v;
    });
}

gapsit_status gapsit_gap_band(const gapsit_model* model, int l,
                              double* center_closed, double* center_direct,
                              double* width, double* mass,
                              double* kappa_prime_mean) {
    return wrap([&] {
        const gapsit::GapBand band =
            gapsit::gap_band(l, model_ref(model).rapidity());
        if (center_closed) *center_closed = band.center_closed;
        if (center_direct) *center_direct = band.center_direct;
        if (width) *width = band.width;
        if (mass) *mass = band.mass;
        if (kappa_prime_mean) *kappa_prime_mean = band.kappa_prime_mean;
    });
}

gapsit_status gapsit_gap_energy(const gapsit_model* model, int l, double q,
                                double* out_eps, int* valid) {
    return wrap([&] {
        const gapsit::Model& m = model_ref(model);
        const gapsit::GapEnergy e =
            gapsit::gap_energy(q, gapsit::gap_band(l, m.rapidity()));
        if (out_eps) *out_eps = e.eps;
        if (valid) *valid = e.effective_mass_valid ? 1 : 0;
    });
}

gapsit_status gapsit_gap_dispersion_inside(const gapsit_model* model, int l,
                                           double eps_l, double H, double* out_Q) {
    return wrap([&] {
        const gapsit::Model& m = model_ref(model);
        *out_Q = gapsit::gap_dispersion_inside(
            eps_l, H, gapsit::gap_band(l, m.rapidity()), m.rapidity());
    });
}

gapsit_status gapsit_gap_velocity_ratio(const gapsit_model* model, int l, double H,
                                        double* out_inv_V, double* out_inv_v,
                                        double* out_bracket, int* superluminal) {
    return wrap([&] {
        const gapsit::Model& m = model_ref(model);
        const gapsit::GapVelocity v = gapsit::gap_velocity_ratio(
            H, gapsit::gap_band(l, m.rapidity()), m.rapidity());
        if (out_inv_V) *out_inv_V = v.inv_V;
        if (out_inv_v) *out_inv_v = v.inv_v;
        if (out_bracket) *out_bracket = v.bracket;
        if (superluminal) *superluminal = v.superluminal_warning ? 1 : 0;
    });
}

gapsit_status gapsit_pair_size(const gapsit_model* model, double xi, double* out) {
    return wrap([&] {
        *out = gapsit::pair_size(xi, model_ref(model).medium());
    });
}

gapsit_status gapsit_build_composite(const gapsit_model* model, double H, int n,
                                     int n_gap_pairs, double* omega_re,
                                     double* omega_im, double* k_re, double* k_im,
                                     double* pair_xi, double* pair_eta,
                                     double* pair_residual, double* xi_minus,
                                     double* eigenenergy) {
    return wrap([&] {
        const gapsit::CompositeSoliton comp = gapsit::build_composite(
            H, n, n_gap_pairs, model_ref(model).rapidity());
        for (int j = 0; j < n; ++j) {
            const size_t u = static_cast<size_t>(j);
            if (omega_re) omega_re[j] = comp.image.frequencies[u].real();
            if (omega_im) omega_im[j] = comp.image.frequencies[u].imag();
            if (k_re) k_re[j] = comp.image.momenta[u].real();
            if (k_im) k_im[j] = comp.image.momenta[u].imag();
        }
        for (int j = 0; j < n_gap_pairs; ++j) {
            const size_t u = static_cast<size_t>(j);
            if (pair_xi) pair_xi[j] = comp.gap_part[u].xi;
            if (pair_eta) pair_eta[j] = comp.gap_part[u].eta;
            if (pair_residual) pair_residual[j] = comp.gap_part[u].residual;
        }
        if (xi_minus) *xi_minus = comp.xi_minus;
        if (eigenenergy) *eigenenergy = comp.image.eigenenergy;
    });
}

gapsit_status gapsit_cmd_medium(const gapsit_model* model, gapsit_format format,
                                char** out_text) {
    return wrap([&] {
        *out_text = dup_string(
            gapsit::render(gapsit::cmd_medium(model_ref(model)), to_format(format)));
    });
}

gapsit_status gapsit_cmd_string(const gapsit_model* model, double H, int n,
                                gapsit_format format, char** out_text) {
    gapsit_status status = wrap([&] {
        const gapsit::CommandOutput out = gapsit::cmd_string(model_ref(model), H, n);
        *out_text = dup_string(gapsit::render(out, to_format(format)));
        if (out.nc_failed)
            throw gapsit::NcViolationError("cmd_string: necessary condition failed");
    });
    return status;
}

gapsit_status gapsit_cmd_ordinary(const gapsit_model* model, int n,
                                  gapsit_format format, char** out_text) {
    return wrap([&] {
        *out_text = dup_string(gapsit::render(
            gapsit::cmd_ordinary(model_ref(model), n), to_format(format)));
    });
}

gapsit_status gapsit_cmd_gap(const gapsit_model* model, int l_max, double H,
                             gapsit_format format, char** out_text) {
    return wrap([&] {
        *out_text = dup_string(gapsit::render(
            gapsit::cmd_gap(model_ref(model), l_max, H), to_format(format)));
    });
}

gapsit_status gapsit_cmd_composite(const gapsit_model* model, double H, int n,
                                   int n_gap_pairs, gapsit_format format,
                                   char** out_text) {
    return wrap([&] {
        *out_text = dup_string(gapsit::render(
            gapsit::cmd_composite(model_ref(model), H, n, n_gap_pairs),
            to_format(format)));
    });
}

gapsit_status gapsit_cmd_vacuum(const gapsit_model* model, int n,
                                gapsit_format format, char** out_text) {
    return wrap([&] {
        *out_text = dup_string(gapsit::render(
            gapsit::cmd_vacuum(model_ref(model), n), to_format(format)));
    });
}

} // extern "C"
