#ifndef GAPSIT_SOLITONS_HPP
#define GAPSIT_SOLITONS_HPP

#include "strings.hpp"

namespace gapsit {

/// Band data for a gap soliton of l confined pairs.
struct GapBand {
    int l = 0;
    double center_closed = 0.0;    // omega12 + (beta/a) l, used in the energy formula
    double center_direct = 0.0;    // l^{-1} sum_j xi0_j = omega12 + (beta/a) l/2
    double width = 0.0;            // Delta_l
    double mass = 0.0;             // m_l
    double kappa_prime_mean = 0.0; // (1/l) sum_j |kappa'(xi0_j)|
    std::vector<double> xi0;       // seed positions of the pairs
    TaylorAB ab;
    double beta = 0.0;
    double rho = 0.0;
};

struct OrdinaryVelocity {
    double inv_V = 0.0;      // inside the atomic system
    double inv_v = 0.0;      // outside
    double correction = 0.0; // atomic term, inv_V - inv_v
};

struct GapVelocity {
    double inv_V = 0.0;
    double inv_v = 0.0;
    double bracket = 0.0;            // dimensionless factor of Eq. for 1/V_l
    bool superluminal_warning = false; // bracket <= 0: formula outside validity
};

struct GapEnergy {
    double eps = 0.0;
    bool effective_mass_valid = true; // q^2/2m within the band width
};

/// Bound state mixing confined gap pairs with lower-branch members of one
/// string.  Frequencies/momenta live in `image` in string order; the gap
/// part stores the solved pair parameters, and xi_minus is the common
/// lower-branch center h^{-1}(H) (NaN when the ordinary part is empty).
struct CompositeSoliton {
    double H = 0.0;
    int n_gap_pairs = 0;
    std::vector<PairParams> gap_part;
    double xi_minus = 0.0;
    SolitonImage image;
};

/// Empty-space SIT dispersion Q = K - (2 rho / n) atan(n gamma / (2 (Omega - omega12))).
double vacuum_dispersion(double Omega, double K, int n, const AtomChainParams& atoms);

/// 1/V = 1/c + gamma rho / ((Omega - omega12)^2 + (n gamma / 2)^2).
double vacuum_inverse_velocity(double Omega, int n, const AtomChainParams& atoms,
                               double c);

/// Spatial soliton size 1/(gamma n).
double vacuum_soliton_size(int n, const AtomChainParams& atoms);

/// q(xi) = k(xi) - (2 rho / n) atan(beta n / (2 h(xi))) on the lower branch.
double ordinary_dispersion(double xi, int n, const Rapidity& rap);

/// 1/v = dk/dxi and 1/V = 1/v + rho beta h' / (h^2 + (beta n / 2)^2).
OrdinaryVelocity ordinary_inverse_velocity(double xi, int n, const Rapidity& rap);

/// Band center, width Delta_l = b beta^2 (4 l^2 - 1) / (12 a^3) and mass
/// m_l = (a / 2b) [(1/l) sum_j |kappa'(xi0_j)|]^2.
GapBand gap_band(int l, const Rapidity& rap);

/// eps_l(q) = center - Delta_l + q^2 / (2 m_l).
GapEnergy gap_energy(double q, const GapBand& band);

/// Per-pair momentum implied by the carrying rapidity, q = (|H|/a) kbar',
/// and its inverse.
double gap_q_of_H(double H, const GapBand& band);
double gap_H_of_q(double q, const GapBand& band);

/// Q(eps_l) = q(eps_l) - (rho / l) atan(beta l / H).
double gap_dispersion_inside(double eps_l, double H, const GapBand& band,
                             const Rapidity& rap);

/// 1/V_l = (1/v_l)(1 - [a l / sum_j |kappa'(xi0_j)|] rho beta / (H^2 + beta^2 l^2)).
GapVelocity gap_velocity_ratio(double H, const GapBand& band, const Rapidity& rap);

/// Pair size delta = 1/kappa(xi).
double pair_size(double xi, const Medium& medium);

/// Composite construction: the outermost n_gap_pairs conjugate pairs of
/// the string map into the gap, the remaining members map near the lower
/// branch.  Requires H <= 0, and H < 0 whenever an ordinary part exists.
CompositeSoliton build_composite(double H, int n, int n_gap_pairs,
                                 const Rapidity& rap);

} // namespace gapsit

#endif
