#ifndef GAPSIT_MEDIUM_HPP
#define GAPSIT_MEDIUM_HPP

#include <complex>

#include "solver_config.hpp"

namespace gapsit {

using Complex = std::complex<double>;

/// Frequency bands of the dispersive medium: propagating branches below
/// and above the gap, and the gap itself.
enum class Band { LowerBranch, Gap, UpperBranch };

const char* band_name(Band b);

/// Which half of the complex frequency plane a branch is continued into.
/// The choice matters only on (and across) the gap segment of the real
/// axis, where the square root has its cut.
enum class HalfPlane { Upper, Lower };

struct MediumParams {
    double omega_perp = 1.0;  // lower gap edge
    double omega_par = 2.0;   // upper gap edge
    double c = 1.0;           // vacuum light speed

    void validate() const {
        if (!(omega_perp > 0.0 && omega_perp < omega_par))
            throw ValidationError("medium: requires 0 < omega_perp < omega_par");
        if (!(c > 0.0))
            throw ValidationError("medium: requires c > 0");
    }
};

/// Dielectric model of the frequency-dispersive medium:
///   eps(w) = (w^2 - omega_par^2) / (w^2 - omega_perp^2)
/// negative exactly on the gap (omega_perp, omega_par).  All evaluation is
/// pure; instances are freely shared across threads.
class Medium {
public:
    Medium(MediumParams p, SolverConfig cfg = {});

    Complex permeability(Complex omega) const;

    /// sqrt(eps) with the branch fixed on the real axis: real positive on
    /// the propagating bands, +i*nu just above the gap and -i*nu just
    /// below.  `side` names the half plane the branch is continued from;
    /// evaluating the upper-plane branch below the axis (or vice versa)
    /// follows the continuation across the gap cut.
    Complex refractive_index(Complex omega, HalfPlane side) const;

    /// nu(xi) = sqrt(|eps(xi)|) for xi strictly inside the gap.
    double nu(double xi) const;

    /// k(w) = w n(w) / c.
    Complex wavenumber(Complex omega, HalfPlane side) const;

    /// Gap decay constant kappa(xi) = xi nu(xi) / c.
    double kappa(double xi) const;

    /// d kappa / d xi, analytic.
    double kappa_prime(double xi) const;

    /// Form factor z(w) = w n^3(w) / omega12 for real w on a band.
    double form_factor(double omega, double omega12) const;

    Band classify(double xi) const;

    const MediumParams& params() const { return params_; }
    const SolverConfig& solver() const { return cfg_; }

    /// Absolute exclusion radius around 0 and the gap edges.
    double exclusion_radius() const { return excl_; }

private:
    bool in_gap_strip(double re) const;

    MediumParams params_;
    SolverConfig cfg_;
    double excl_;
};

} // namespace gapsit

#endif
