#ifndef GAPSIT_STRINGS_HPP
#define GAPSIT_STRINGS_HPP

#include <vector>

#include "rapidity.hpp"

namespace gapsit {

/// n rapidities sharing a real part H with imaginary parts spaced by beta:
/// h_j = H + i (beta/2) (n + 1 - 2j), j = 1..n.
struct BetheString {
    double H = 0.0;
    int n = 0;
    double beta = 0.0;
    std::vector<Complex> rapidities;
};

BetheString build_string(double H, int n, double beta);

/// Two-particle scattering factor (hj - hl - i beta) / (hj - hl + i beta).
Complex two_particle_phase(Complex hj, Complex hl, double beta);

enum class SolitonKind { SinglePolariton, OrdinarySoliton, GapSoliton, CompositeSoliton };

const char* soliton_kind_name(SolitonKind k);

/// Frequency/momentum image of a Bethe string.  Frequencies come in
/// conjugate pairs (with at most one real member), so the eigenenergy
/// sum(omega_j) is real.
struct SolitonImage {
    SolitonKind kind = SolitonKind::SinglePolariton;
    BetheString string;
    std::vector<Complex> frequencies;
    std::vector<Complex> momenta;
    double eigenenergy = 0.0;
};

struct NcEntry {
    int index = 0;       // 1-based particle index in string order
    double im_h = 0.0;
    double im_k = 0.0;
    bool exempt = false; // real rapidity
    bool ok = true;
};

struct NcResult {
    bool ok = true;
    std::vector<NcEntry> entries;
};

/// Necessary condition sgn(Im h_j) = sgn(Im k_j) for every member with a
/// nonzero imaginary rapidity.
NcResult check_nc(const SolitonImage& image);

/// Bethe-equation residuals, one per particle.
///
/// The per-particle equation has zero/pole factors at exact string
/// spacings, so the j-th residual multiplies the first j member equations
/// together (particles ordered by descending Im h).  Factors between
/// members already included cancel in conjugate pairs, which keeps every
/// entry finite on exact strings; the last entry reduces to the overall
/// quantization residual exp(i n Q L) - 1, and for n = 1 the single entry
/// is the plain one-particle equation.
std::vector<Complex> bae_residuals(const SolitonImage& image, const Rapidity& rap);

/// One confined gap excitation pair: solve/seed data for the pair
/// equations Re h(xi, eta) = H, Im h(xi, eta) = mu.
struct PairParams {
    int l = 0;
    int j = 0;
    double xi = 0.0;
    double eta = 0.0;
    double residual = 0.0;
};

/// Closed-form seed: xi0 = omega12 + (beta/a)(l + 1/2 - j), eta = |H|/a.
PairParams approx_pair_params(double H, int l, int j, const TaylorAB& ab,
                              const AtomChainParams& atoms);

/// Exact pair equations for the j-th of l pairs via 2D Newton on the
/// gap-continued rapidity, seeded by the closed form.
PairParams solve_pair_params(double H, int l, int j, const Rapidity& rap);

/// Generalized gap point: Re h = H, Im h = mu (mu > 0).
PairParams solve_gap_point(double H, double mu, const Rapidity& rap);

/// Image of a string centered at a real band frequency: the center fixes
/// H = h(xi_center) and each member frequency solves h(omega) = h_j in the
/// complex plane near the band.
SolitonImage band_string_image(double xi_center, int n, const Rapidity& rap);

/// Image of a string under the vacuum (linear) rapidity map.
SolitonImage vacuum_string_image(double H, int n, const Rapidity& rap);

/// Solves h(omega) = h_target near a real band point xi_seed.
Complex map_rapidity_near_band(Complex h_target, double xi_seed, const Rapidity& rap);

} // namespace gapsit

#endif
