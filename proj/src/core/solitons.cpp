#include "solitons.hpp"

#include <cmath>
#include <limits>

namespace gapsit {

namespace {
// Principal-arctan dispersion relations jump by pi where the argument's
// denominator crosses zero; values this close to the jump are errors.
constexpr double kResonanceRel = 1e-9;
} // namespace

double vacuum_dispersion(double Omega, double K, int n, const AtomChainParams& atoms) {
    if (n < 1)
        throw ValidationError("vacuum_dispersion: n must be >= 1");
    const double detune = Omega - atoms.omega12;
    if (std::abs(detune) < kResonanceRel * atoms.omega12)
        throw ResonanceError("vacuum_dispersion: Omega within exclusion radius of omega12");
    if (atoms.rho == 0.0) return K;
    return K - (2.0 * atoms.rho / n) * std::atan(n * atoms.gamma / (2.0 * detune));
}

double vacuum_inverse_velocity(double Omega, int n, const AtomChainParams& atoms,
                               double c) {
    if (n < 1)
        throw ValidationError("vacuum_inverse_velocity: n must be >= 1");
    const double detune = Omega - atoms.omega12;
    const double half = 0.5 * n * atoms.gamma;
    return 1.0 / c + atoms.gamma * atoms.rho / (detune * detune + half * half);
}

double vacuum_soliton_size(int n, const AtomChainParams& atoms) {
    if (n < 1)
        throw ValidationError("vacuum_soliton_size: n must be >= 1");
    return 1.0 / (atoms.gamma * n);
}

double ordinary_dispersion(double xi, int n, const Rapidity& rap) {
    if (n < 1)
        throw ValidationError("ordinary_dispersion: n must be >= 1");
    const AtomChainParams& atoms = rap.atoms();
    if (rap.mode() == RapidityMode::FGM &&
        rap.medium().classify(xi) != Band::LowerBranch)
        throw OutOfBandError("ordinary_dispersion: xi not on the lower branch");
    const double h = rap.band_value(xi);
    if (std::abs(h) < kResonanceRel)
        throw ResonanceError("ordinary_dispersion: h(xi) at the arctan jump");
    const double k = rap.wavenumber(Complex(xi, 0.0), HalfPlane::Upper).real();
    if (atoms.rho == 0.0) return k;
    return k - (2.0 * atoms.rho / n) * std::atan(atoms.beta * n / (2.0 * h));
}

OrdinaryVelocity ordinary_inverse_velocity(double xi, int n, const Rapidity& rap) {
    if (n < 1)
        throw ValidationError("ordinary_inverse_velocity: n must be >= 1");
    const AtomChainParams& atoms = rap.atoms();
    if (rap.mode() == RapidityMode::FGM &&
        rap.medium().classify(xi) != Band::LowerBranch)
        throw OutOfBandError("ordinary_inverse_velocity: xi not on the lower branch");
    OrdinaryVelocity v;
    v.inv_v = rap.wavenumber_derivative(xi);
    const double h = rap.band_value(xi);
    const double half = 0.5 * atoms.beta * n;
    v.correction = atoms.rho * atoms.beta * rap.derivative(xi) / (h * h + half * half);
    v.inv_V = v.inv_v + v.correction;
    return v;
}

GapBand gap_band(int l, const Rapidity& rap) {
    if (l < 1)
        throw ValidationError("gap_band: l must be >= 1");
    const AtomChainParams& atoms = rap.atoms();
    const Medium& med = rap.medium();
    GapBand band;
    band.l = l;
    band.ab = rap.taylor_ab();
    band.beta = atoms.beta;
    band.rho = atoms.rho;
    const double step = atoms.beta / band.ab.a;
    band.center_closed = atoms.omega12 + step * l;
    band.center_direct = atoms.omega12 + step * 0.5 * l;
    band.width = band.ab.b * atoms.beta * atoms.beta * (4.0 * l * l - 1.0) /
                 (12.0 * std::pow(band.ab.a, 3));
    if (band.width == 0.0)
        throw ValidationError("gap_band: degenerate width (b = 0)");
    double sum = 0.0;
    band.xi0.reserve(static_cast<size_t>(l));
    for (int j = 1; j <= l; ++j) {
        const double xi = atoms.omega12 + step * (l + 0.5 - j);
        if (xi >= med.params().omega_par - med.exclusion_radius())
            throw BandEscapeError("gap_band: xi0 escapes the gap; soliton too large");
        band.xi0.push_back(xi);
        sum += std::abs(med.kappa_prime(xi));
    }
    band.kappa_prime_mean = sum / l;
    band.mass = (band.ab.a / (2.0 * band.ab.b)) * band.kappa_prime_mean *
                band.kappa_prime_mean;
    return band;
}

GapEnergy gap_energy(double q, const GapBand& band) {
    GapEnergy e;
    const double kinetic = q * q / (2.0 * band.mass);
    e.eps = band.center_closed - band.width + kinetic;
    e.effective_mass_valid = !(kinetic > std::abs(band.width));
    return e;
}

double gap_q_of_H(double H, const GapBand& band) {
    return std::abs(H) / band.ab.a * band.kappa_prime_mean;
}

double gap_H_of_q(double q, const GapBand& band) {
    return -q * band.ab.a / band.kappa_prime_mean;
}

double gap_dispersion_inside(double eps_l, double H, const GapBand& band,
                             const Rapidity& rap) {
    double radicand = 2.0 * band.mass * (eps_l - band.center_closed + band.width);
    // Absorb the rounding residue of "band bottom" inputs computed as
    // center - width.
    const double scale = 2.0 * band.mass *
                         (std::abs(eps_l) + std::abs(band.center_closed) +
                          std::abs(band.width));
    if (radicand < 0.0 && radicand >= -64.0 * 2.220446049250313e-16 * scale)
        radicand = 0.0;
    if (radicand < 0.0)
        throw RangeError("gap_dispersion_inside: eps_l below the band bottom");
    if (std::abs(H) < kResonanceRel)
        throw ResonanceError("gap_dispersion_inside: H at the arctan jump");
    const double q = std::sqrt(radicand);
    const double rho = rap.atoms().rho;
    if (rho == 0.0) return q;
    return q - (rho / band.l) * std::atan(band.beta * band.l / H);
}

GapVelocity gap_velocity_ratio(double H, const GapBand& band, const Rapidity& rap) {
    const double q = gap_q_of_H(H, band);
    if (q == 0.0)
        throw ZeroVelocityError("gap_velocity_ratio: zero momentum (H = 0)");
    GapVelocity v;
    v.inv_v = band.mass / q;
    const double l = band.l;
    v.bracket = 1.0 - (band.ab.a / band.kappa_prime_mean) *
                          (rap.atoms().rho * band.beta /
                           (H * H + band.beta * band.beta * l * l));
    v.superluminal_warning = v.bracket <= 0.0;
    v.inv_V = v.inv_v * v.bracket;
    return v;
}

double pair_size(double xi, const Medium& medium) {
    return 1.0 / medium.kappa(xi);
}

CompositeSoliton build_composite(double H, int n, int n_gap_pairs,
                                 const Rapidity& rap) {
    if (n < 1 || n_gap_pairs < 1)
        throw ValidationError("build_composite: n and n_gap_pairs must be >= 1");
    if (2 * n_gap_pairs > n)
        throw ValidationError("build_composite: 2 n_gap_pairs must be <= n");
    const int n_ordinary = n - 2 * n_gap_pairs;
    if (H > 0.0 || (n_ordinary > 0 && !(H < 0.0)))
        throw ValidationError("build_composite: requires H < 0 (H = 0 only for a pure gap part)");

    const double beta = rap.atoms().beta;
    BetheString s = build_string(H, n, beta);

    CompositeSoliton comp;
    comp.H = H;
    comp.n_gap_pairs = n_gap_pairs;
    comp.xi_minus = std::numeric_limits<double>::quiet_NaN();

    std::vector<Complex> freqs(static_cast<size_t>(n));
    std::vector<Complex> moms(static_cast<size_t>(n));

    // Outermost conjugate pairs map into the gap.
    for (int j = 1; j <= n_gap_pairs; ++j) {
        const double mu = 0.5 * beta * (n + 1 - 2 * j);
        PairParams p = solve_gap_point(H, mu, rap);
        p.l = n_gap_pairs;
        p.j = j;
        comp.gap_part.push_back(p);
        const double kp = rap.medium().kappa_prime(p.xi);
        const double q = p.eta * std::abs(kp);
        const double kap = rap.medium().kappa(p.xi);
        freqs[static_cast<size_t>(j - 1)] = Complex(p.xi, p.eta);
        freqs[static_cast<size_t>(n - j)] = Complex(p.xi, -p.eta);
        moms[static_cast<size_t>(j - 1)] = Complex(q, kap);
        moms[static_cast<size_t>(n - j)] = Complex(q, -kap);
    }

    // Remaining members form a deformed lower-branch soliton around
    // xi_minus = h^{-1}(H).
    if (n_ordinary > 0) {
        comp.xi_minus = rap.invert(H, Band::LowerBranch);
        for (int j = n_gap_pairs + 1; j <= n - n_gap_pairs; ++j) {
            const Complex hj = s.rapidities[static_cast<size_t>(j - 1)];
            Complex w;
            if (std::abs(hj.imag()) < 1e-14) {
                w = Complex(comp.xi_minus, 0.0);
            } else if (hj.imag() > 0.0) {
                try {
                    w = map_rapidity_near_band(hj, comp.xi_minus, rap);
                } catch (const Error& e) {
                    throw MappingError(std::string("build_composite: member ") +
                                       std::to_string(j) + ": " + e.what());
                }
            } else {
                continue; // mirrored below
            }
            freqs[static_cast<size_t>(j - 1)] = w;
            const HalfPlane side = w.imag() >= 0.0 ? HalfPlane::Upper : HalfPlane::Lower;
            moms[static_cast<size_t>(j - 1)] = rap.wavenumber(w, side);
        }
        for (int j = n_gap_pairs + 1; j <= n - n_gap_pairs; ++j) {
            const Complex hj = s.rapidities[static_cast<size_t>(j - 1)];
            if (hj.imag() < -1e-14) {
                freqs[static_cast<size_t>(j - 1)] =
                    std::conj(freqs[static_cast<size_t>(n - j)]);
                moms[static_cast<size_t>(j - 1)] =
                    std::conj(moms[static_cast<size_t>(n - j)]);
            }
        }
    }

    SolitonImage img;
    img.kind = n_ordinary == 0 ? SolitonKind::GapSoliton : SolitonKind::CompositeSoliton;
    img.string = std::move(s);
    img.frequencies = std::move(freqs);
    img.momenta = std::move(moms);
    Complex e(0.0, 0.0);
    for (const Complex& w : img.frequencies) e += w;
    if (std::abs(e.imag()) > 1e-10)
        throw MappingError("build_composite: eigenenergy has a nonzero imaginary part");
    img.eigenenergy = e.real();

    const NcResult nc = check_nc(img);
    if (!nc.ok)
        throw NcViolationError("build_composite: assembled image violates the necessary condition");
    comp.image = std::move(img);
    return comp;
}

} // namespace gapsit
