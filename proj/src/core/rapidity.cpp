#include "rapidity.hpp"

#include <cmath>

#include "numerics.hpp"

namespace gapsit {

AtomChainParams AtomChainParams::make(double omega12, double beta, double gamma,
                                      double rho, double length,
                                      std::optional<long> m_atoms) {
    if (!(omega12 > 0.0))
        throw ValidationError("atoms.omega12: must be > 0");
    if (!(beta > 0.0))
        throw ValidationError("atoms.beta: must be > 0");
    if (!(gamma > 0.0))
        throw ValidationError("atoms.gamma: must be > 0");
    if (!(rho >= 0.0))
        throw ValidationError("atoms.rho: must be >= 0");
    if (!(length > 0.0))
        throw ValidationError("atoms.length: must be > 0");
    const long derived = std::lround(rho * length);
    if (m_atoms && *m_atoms != derived)
        throw ValidationError("atoms.m_atoms: must equal round(rho * length)");
    AtomChainParams p;
    p.omega12 = omega12;
    p.beta = beta;
    p.gamma = gamma;
    p.rho = rho;
    p.length = length;
    p.m_atoms = derived;
    return p;
}

Rapidity::Rapidity(const Medium& medium, AtomChainParams atoms, RapidityMode mode)
    : medium_(medium), atoms_(atoms), mode_(mode) {}

Complex Rapidity::value(Complex omega, HalfPlane side) const {
    if (mode_ == RapidityMode::Vacuum)
        return (omega - atoms_.omega12) / atoms_.omega12;
    const Complex n = medium_.refractive_index(omega, side);
    return (omega - atoms_.omega12) / (omega * n * n * n);
}

void Rapidity::require_band(double xi) const {
    const Band b = medium_.classify(xi);
    if (b == Band::Gap)
        throw OutOfBandError("rapidity: xi inside the gap; use the continued form");
}

double Rapidity::band_value(double xi) const {
    if (mode_ == RapidityMode::Vacuum)
        return (xi - atoms_.omega12) / atoms_.omega12;
    require_band(xi);
    return value(Complex(xi, 0.0), HalfPlane::Upper).real();
}

double Rapidity::derivative(double xi) const {
    if (mode_ == RapidityMode::Vacuum) return 1.0 / atoms_.omega12;
    require_band(xi);
    const MediumParams& m = medium_.params();
    const double e = (xi * xi - m.omega_par * m.omega_par) /
                     (xi * xi - m.omega_perp * m.omega_perp);
    const double span = m.omega_par * m.omega_par - m.omega_perp * m.omega_perp;
    const double d = xi * xi - m.omega_perp * m.omega_perp;
    const double ep = 2.0 * xi * span / (d * d);
    const double num = xi * e - (xi - atoms_.omega12) * (e + 1.5 * xi * ep);
    const double den = xi * xi * std::pow(e, 2.5);
    return num / den;
}

Complex Rapidity::wavenumber(Complex omega, HalfPlane side) const {
    if (mode_ == RapidityMode::Vacuum) return omega / medium_.params().c;
    return medium_.wavenumber(omega, side);
}

double Rapidity::wavenumber_derivative(double xi) const {
    if (mode_ == RapidityMode::Vacuum) return 1.0 / medium_.params().c;
    require_band(xi);
    const MediumParams& m = medium_.params();
    const double e = (xi * xi - m.omega_par * m.omega_par) /
                     (xi * xi - m.omega_perp * m.omega_perp);
    const double span = m.omega_par * m.omega_par - m.omega_perp * m.omega_perp;
    const double d = xi * xi - m.omega_perp * m.omega_perp;
    const double ep = 2.0 * xi * span / (d * d);
    const double n = std::sqrt(e);
    return (n + xi * ep / (2.0 * n)) / m.c;
}

double Rapidity::phi(double xi) const {
    if (medium_.params().omega_par - xi < medium_.exclusion_radius())
        throw DerivativeOverflowError("phi: xi within exclusion radius of omega_par");
    const double v = medium_.nu(xi);
    return 1.0 / (xi * v * v * v);
}

double Rapidity::phi_prime(double xi) const {
    const double p = phi(xi);
    const MediumParams& m = medium_.params();
    const double u = m.omega_par * m.omega_par - xi * xi;
    const double d = xi * xi - m.omega_perp * m.omega_perp;
    return -p * (1.0 / xi - 3.0 * xi * (1.0 / u + 1.0 / d));
}

TaylorAB Rapidity::taylor_ab() const {
    const double w12 = atoms_.omega12;
    const MediumParams& m = medium_.params();
    if (!(w12 > m.omega_perp && w12 < m.omega_par))
        throw OutOfGapError("taylor_ab: omega12 not inside the gap");
    TaylorAB ab;
    ab.a = phi(w12);
    ab.b = phi_prime(w12);
    // b feeds every band-structure formula; a silent slope error would
    // corrupt all of them, so cross-check against a centered difference.
    const double step = 1e-6 * w12;
    const double fd = (phi(w12 + step) - phi(w12 - step)) / (2.0 * step);
    if (std::abs(ab.b - fd) > 1e-6 * std::max(1.0, std::abs(ab.b)))
        throw ValidationError("taylor_ab: analytic b disagrees with finite difference");
    return ab;
}

double Rapidity::invert(double H, Band band) const {
    const SolverConfig& cfg = medium_.solver();
    const double f_tol = 1e-12 * std::max(1.0, std::abs(H));

    if (mode_ == RapidityMode::Vacuum) {
        const double xi = atoms_.omega12 * (1.0 + H);
        if (!(xi > 0.0))
            throw RangeError("invert: H maps below zero frequency in vacuum mode");
        return xi;
    }

    const MediumParams& m = medium_.params();
    const double excl = medium_.exclusion_radius();
    auto f = [this, H](double xi) { return band_value(xi) - H; };
    auto df = std::optional<Fn1>([this](double xi) { return derivative(xi); });

    if (band == Band::LowerBranch) {
        if (!(H < 0.0))
            throw RangeError("invert: lower branch image is (-inf, 0)");
        const double lo = 2.0 * excl;
        const double hi = m.omega_perp - 2.0 * excl;
        if (f(lo) > 0.0 || f(hi) < 0.0)
            throw RangeError("invert: H outside the resolvable lower-branch range");
        return bisect_then_newton(f, lo, hi, f_tol, cfg, df);
    }
    if (band == Band::UpperBranch) {
        // h is not monotone on the upper branch; scan geometrically from
        // the band edge and solve inside the first bracket found.
        double lo = m.omega_par * (1.0 + 1e-7);
        double flo = f(lo);
        const double limit = 1e6 * m.omega_par;
        for (double hi = lo * 1.05; hi < limit; hi *= 1.05) {
            const double fhi = f(hi);
            if ((flo > 0.0) != (fhi > 0.0))
                return bisect_then_newton(f, lo, hi, f_tol, cfg, df);
            lo = hi;
            flo = fhi;
        }
        throw RangeError("invert: H outside the upper-branch image");
    }
    throw RangeError("invert: rapidity is not invertible inside the gap");
}

} // namespace gapsit
