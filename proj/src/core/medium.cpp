#include "medium.hpp"

#include <cmath>

namespace gapsit {

const char* band_name(Band b) {
    switch (b) {
        case Band::LowerBranch: return "lower";
        case Band::Gap: return "gap";
        case Band::UpperBranch: return "upper";
    }
    return "?";
}

Medium::Medium(MediumParams p, SolverConfig cfg)
    : params_(p), cfg_(cfg) {
    params_.validate();
    cfg_.validate();
    excl_ = cfg_.edge_exclusion * params_.omega_perp;
}

Complex Medium::permeability(Complex omega) const {
    const double op = params_.omega_perp;
    const double ol = params_.omega_par;
    if (std::abs(omega - op) < excl_ || std::abs(omega + op) < excl_)
        throw PoleError("permeability: omega within exclusion radius of a pole");
    return (omega * omega - ol * ol) / (omega * omega - op * op);
}

bool Medium::in_gap_strip(double re) const {
    const double a = std::abs(re);
    return a > params_.omega_perp && a < params_.omega_par;
}

Complex Medium::refractive_index(Complex omega, HalfPlane side) const {
    const Complex eps = permeability(omega);
    if (omega.imag() == 0.0 && in_gap_strip(omega.real())) {
        const double v = std::sqrt(std::abs(eps.real()));
        return side == HalfPlane::Upper ? Complex(0.0, v) : Complex(0.0, -v);
    }
    Complex s = std::sqrt(eps);  // principal branch; cut only on the gap segment
    const bool crossed = in_gap_strip(omega.real()) &&
                         ((side == HalfPlane::Upper && omega.imag() < 0.0) ||
                          (side == HalfPlane::Lower && omega.imag() > 0.0));
    return crossed ? -s : s;
}

double Medium::nu(double xi) const {
    if (!(xi > params_.omega_perp && xi < params_.omega_par))
        throw OutOfGapError("nu: xi outside the gap");
    if (xi - params_.omega_perp < excl_)
        throw OutOfGapError("nu: xi within exclusion radius of omega_perp");
    const double e = ((xi * xi - params_.omega_par * params_.omega_par) /
                      (xi * xi - params_.omega_perp * params_.omega_perp));
    return std::sqrt(-e);
}

Complex Medium::wavenumber(Complex omega, HalfPlane side) const {
    return omega * refractive_index(omega, side) / params_.c;
}

double Medium::kappa(double xi) const {
    return xi * nu(xi) / params_.c;
}

double Medium::kappa_prime(double xi) const {
    if (params_.omega_par - xi < excl_)
        throw DerivativeOverflowError(
            "kappa_prime: xi within exclusion radius of omega_par");
    const double v = nu(xi);  // gap membership checked here
    const double d = xi * xi - params_.omega_perp * params_.omega_perp;
    const double span = params_.omega_par * params_.omega_par -
                        params_.omega_perp * params_.omega_perp;
    const double dnu = -xi * span / (v * d * d);
    return (v + xi * dnu) / params_.c;
}

double Medium::form_factor(double omega, double omega12) const {
    const Band b = classify(omega);
    if (b == Band::Gap)
        throw OutOfBandError("form_factor: omega inside the gap");
    const Complex n = refractive_index(Complex(omega, 0.0), HalfPlane::Upper);
    return omega * std::pow(n.real(), 3) / omega12;
}

Band Medium::classify(double xi) const {
    if (!(xi > 0.0))
        throw ValidationError("classify: xi must be > 0");
    if (xi < excl_ || std::abs(xi - params_.omega_perp) < excl_ ||
        std::abs(xi - params_.omega_par) < excl_)
        throw EdgeError("classify: xi within exclusion radius of an edge");
    if (xi < params_.omega_perp) return Band::LowerBranch;
    if (xi < params_.omega_par) return Band::Gap;
    return Band::UpperBranch;
}

} // namespace gapsit
