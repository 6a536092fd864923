#ifndef GAPSIT_RAPIDITY_HPP
#define GAPSIT_RAPIDITY_HPP

#include <cmath>
#include <optional>

#include "medium.hpp"

namespace gapsit {

enum class RapidityMode { FGM, Vacuum };

struct AtomChainParams {
    double omega12 = 1.5;  // atomic transition frequency
    double beta = 0.01;    // rapidity-space coupling
    double gamma = 0.01;   // vacuum coupling (vacuum-limit formulas only)
    double rho = 1.0;      // linear atom density
    double length = 1000.0;
    long m_atoms = 1000;   // always round(rho * length)

    /// Builds a validated record; m_atoms, when supplied, must agree with
    /// round(rho * length).
    static AtomChainParams make(double omega12, double beta, double gamma,
                                double rho, double length,
                                std::optional<long> m_atoms = std::nullopt);
};

/// Taylor coefficients of phi(xi) = 1/(xi nu^3(xi)) at omega12:
/// phi ~= a + b (xi - omega12).
struct TaylorAB {
    double a = 0.0;
    double b = 0.0;
};

/// The rapidity map h(omega) of the model and its band inverses.
///
/// FGM mode evaluates h(w) = (w - omega12) / (w n^3(w)); Vacuum mode uses
/// the linear form h = (w - omega12) / omega12 together with k = w / c,
/// which is the empty-space limit the string algebra is built on.
class Rapidity {
public:
    Rapidity(const Medium& medium, AtomChainParams atoms, RapidityMode mode);

    RapidityMode mode() const { return mode_; }
    const AtomChainParams& atoms() const { return atoms_; }
    const Medium& medium() const { return medium_; }

    Complex value(Complex omega, HalfPlane side) const;

    /// h on a real frequency of a propagating band (real by construction).
    double band_value(double xi) const;

    /// dh/dxi on a real band, analytic.
    double derivative(double xi) const;

    /// Wavenumber consistent with the mode: medium dispersion in FGM,
    /// k = w / c in vacuum.
    Complex wavenumber(Complex omega, HalfPlane side) const;

    /// dk/dxi on a real band, analytic.
    double wavenumber_derivative(double xi) const;

    double phi(double xi) const;
    double phi_prime(double xi) const;

    /// a = phi(omega12), b = phi'(omega12); the analytic slope is
    /// cross-checked against a centered difference and any mismatch
    /// beyond 1e-6 relative aborts.
    TaylorAB taylor_ab() const;

    /// Solves h(xi) = H on the requested band.  The lower branch is a
    /// monotone map onto (-inf, 0); the upper branch is scanned for the
    /// first bracket from the band edge upward.
    double invert(double H, Band band) const;

private:
    void require_band(double xi) const;

    const Medium& medium_;
    AtomChainParams atoms_;
    RapidityMode mode_;
};

} // namespace gapsit

#endif
