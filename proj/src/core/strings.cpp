#include "strings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "numerics.hpp"

namespace gapsit {

namespace {
constexpr double kRealRapidityTol = 1e-14;
constexpr double kTwoPi = 6.283185307179586476925286766559;
} // namespace

const char* soliton_kind_name(SolitonKind k) {
    switch (k) {
        case SolitonKind::SinglePolariton: return "single-polariton";
        case SolitonKind::OrdinarySoliton: return "ordinary";
        case SolitonKind::GapSoliton: return "gap";
        case SolitonKind::CompositeSoliton: return "composite";
    }
    return "?";
}

BetheString build_string(double H, int n, double beta) {
    if (n < 1)
        throw ValidationError("build_string: n must be >= 1");
    if (!(beta > 0.0))
        throw ValidationError("build_string: beta must be > 0");
    BetheString s;
    s.H = H;
    s.n = n;
    s.beta = beta;
    s.rapidities.reserve(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j)
        s.rapidities.emplace_back(H, 0.5 * beta * (n + 1 - 2 * j));
    return s;
}

Complex two_particle_phase(Complex hj, Complex hl, double beta) {
    const Complex den = hj - hl + Complex(0.0, beta);
    if (std::abs(den) < 1e-300)
        throw PoleError("two_particle_phase: rapidity separation at -i beta");
    return (hj - hl - Complex(0.0, beta)) / den;
}

NcResult check_nc(const SolitonImage& image) {
    NcResult result;
    const int n = image.string.n;
    result.entries.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        NcEntry e;
        e.index = j + 1;
        e.im_h = image.string.rapidities[static_cast<size_t>(j)].imag();
        e.im_k = image.momenta[static_cast<size_t>(j)].imag();
        e.exempt = std::abs(e.im_h) < kRealRapidityTol;
        e.ok = e.exempt || ((e.im_h > 0.0) == (e.im_k > 0.0));
        if (!e.ok) result.ok = false;
        result.entries.push_back(e);
    }
    return result;
}

std::vector<Complex> bae_residuals(const SolitonImage& image, const Rapidity& rap) {
    const int n = image.string.n;
    const double beta = image.string.beta;
    const double L = rap.atoms().length;
    const long M = rap.atoms().m_atoms;
    const Complex ib2(0.0, 0.5 * beta);

    for (const Complex& k : image.momenta)
        if (!std::isfinite(k.real()) || !std::isfinite(k.imag()))
            throw ValidationError("bae_residuals: momenta must be finite");

    // Particle order: descending Im h, ties by ascending Re h.  The label
    // permutation does not change the residuals; sorting just fixes the
    // cancellation pattern.
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Complex& ha = image.string.rapidities[static_cast<size_t>(a)];
        const Complex& hb = image.string.rapidities[static_cast<size_t>(b)];
        if (ha.imag() != hb.imag()) return ha.imag() > hb.imag();
        return ha.real() < hb.real();
    });
    auto h = [&](int j) {
        return image.string.rapidities[static_cast<size_t>(order[static_cast<size_t>(j)])];
    };
    auto k = [&](int j) {
        return image.momenta[static_cast<size_t>(order[static_cast<size_t>(j)])];
    };

    std::vector<Complex> residuals(static_cast<size_t>(n));
    Complex log_sum(0.0, 0.0); // sum of i k_m L + M Log B_m, factor-paired

    for (int j = 0; j < n; ++j) {
        log_sum += Complex(0.0, 1.0) * k(j) * L;
        // The one-particle factors B_m = (h_m - i beta/2)/(h_m + i beta/2)
        // are accumulated with numerator m paired against denominator m+1:
        // on exact string spacings the paired values are identical and
        // contribute Log(1) instead of a 0/inf pair.
        if (j > 0) {
            const Complex num = h(j - 1) - ib2;
            const Complex den = h(j) + ib2;
            if (num != den) {
                if (std::abs(den) < 1e-300)
                    throw PoleError("bae_residuals: degenerate rapidity coincidence");
                if (std::abs(num) < 1e-300)
                    log_sum.real(-std::numeric_limits<double>::infinity());
                else
                    log_sum += static_cast<double>(M) * std::log(num / den);
            }
        }
        const Complex tail_num = h(j) - ib2;
        const Complex tail_den = h(0) + ib2;
        Complex s = log_sum;
        if (std::abs(tail_den) < 1e-300)
            throw PoleError("bae_residuals: degenerate rapidity at -i beta/2");
        if (std::abs(tail_num) < 1e-300)
            s.real(-std::numeric_limits<double>::infinity());
        else
            s += static_cast<double>(M) * std::log(tail_num / tail_den);

        // Scattering factors spanning the cut between the first j+1
        // equations and the rest; factors internal to either block cancel
        // pairwise (r_ml * r_lm = 1) and are omitted.
        Complex cross(1.0, 0.0);
        for (int m = 0; m <= j; ++m)
            for (int l = j + 1; l < n; ++l)
                cross *= two_particle_phase(h(m), h(l), beta);

        const Complex reduced(s.real(), std::isfinite(s.imag())
                                            ? std::remainder(s.imag(), kTwoPi)
                                            : 0.0);
        residuals[static_cast<size_t>(j)] = std::exp(reduced) - cross;
    }
    return residuals;
}

PairParams approx_pair_params(double H, int l, int j, const TaylorAB& ab,
                              const AtomChainParams& atoms) {
    if (l < 1 || j < 1 || j > l)
        throw ValidationError("approx_pair_params: requires 1 <= j <= l");
    PairParams p;
    p.l = l;
    p.j = j;
    p.xi = atoms.omega12 + (atoms.beta / ab.a) * (l + 0.5 - j);
    p.eta = std::abs(H) / ab.a;
    p.residual = 0.0;
    return p;
}

PairParams solve_gap_point(double H, double mu, const Rapidity& rap) {
    if (!(mu > 0.0))
        throw ValidationError("solve_gap_point: mu must be > 0");
    const TaylorAB ab = rap.taylor_ab();
    const MediumParams& m = rap.medium().params();
    const SolverConfig& cfg = rap.medium().solver();
    const double excl = rap.medium().exclusion_radius();
    const double w12 = rap.atoms().omega12;

    const Vec2 seed = {w12 + mu / ab.a, -H / ab.a};
    auto F = [&](const Vec2& v) -> Vec2 {
        if (!(v[0] > m.omega_perp + excl && v[0] < m.omega_par - excl))
            throw OutOfGapError("solve_gap_point: iterate escaped the gap");
        const Complex hv = rap.value(Complex(v[0], v[1]), HalfPlane::Upper);
        return {hv.real() - H, hv.imag() - mu};
    };
    const Vec2 sol = newton2d(F, seed, cfg.abs_tol, cfg);
    const Vec2 res = F(sol);

    PairParams p;
    p.xi = sol[0];
    p.eta = sol[1];
    p.residual = std::max(std::abs(res[0]), std::abs(res[1]));
    if (!(p.xi > w12 && p.xi < m.omega_par))
        throw MappingError("solve_gap_point: solution left (omega12, omega_par)");
    return p;
}

PairParams solve_pair_params(double H, int l, int j, const Rapidity& rap) {
    if (l < 1 || j < 1 || j > l)
        throw ValidationError("solve_pair_params: requires 1 <= j <= l");
    PairParams p = solve_gap_point(H, rap.atoms().beta * (l + 0.5 - j), rap);
    p.l = l;
    p.j = j;
    return p;
}

Complex map_rapidity_near_band(Complex h_target, double xi_seed, const Rapidity& rap) {
    const SolverConfig& cfg = rap.medium().solver();
    const double slope = rap.derivative(xi_seed);
    const Vec2 seed = {xi_seed, h_target.imag() / slope};
    auto F = [&](const Vec2& v) -> Vec2 {
        const HalfPlane side = v[1] >= 0.0 ? HalfPlane::Upper : HalfPlane::Lower;
        const Complex hv = rap.value(Complex(v[0], v[1]), side);
        return {hv.real() - h_target.real(), hv.imag() - h_target.imag()};
    };
    const Vec2 sol = newton2d(F, seed, cfg.abs_tol, cfg);
    return Complex(sol[0], sol[1]);
}

namespace {

/// Common assembly: frequencies are produced for the upper half of the
/// string and mirrored by conjugation, so the eigenenergy is real by
/// construction.
SolitonImage assemble_image(SolitonKind kind, BetheString s,
                            std::vector<Complex> freqs,
                            std::vector<Complex> moms) {
    SolitonImage img;
    img.kind = kind;
    img.string = std::move(s);
    img.frequencies = std::move(freqs);
    img.momenta = std::move(moms);
    Complex e(0.0, 0.0);
    for (const Complex& w : img.frequencies) e += w;
    if (std::abs(e.imag()) > 1e-10)
        throw MappingError("soliton image: eigenenergy has a nonzero imaginary part");
    img.eigenenergy = e.real();
    return img;
}

} // namespace

SolitonImage vacuum_string_image(double H, int n, const Rapidity& rap) {
    BetheString s = build_string(H, n, rap.atoms().beta);
    const double w12 = rap.atoms().omega12;
    const double c = rap.medium().params().c;
    std::vector<Complex> freqs, moms;
    freqs.reserve(s.rapidities.size());
    moms.reserve(s.rapidities.size());
    for (const Complex& hj : s.rapidities) {
        const Complex w = w12 * (1.0 + hj);
        freqs.push_back(w);
        moms.push_back(w / c);
    }
    const SolitonKind kind =
        n == 1 ? SolitonKind::SinglePolariton : SolitonKind::OrdinarySoliton;
    return assemble_image(kind, std::move(s), std::move(freqs), std::move(moms));
}

SolitonImage band_string_image(double xi_center, int n, const Rapidity& rap) {
    if (rap.mode() == RapidityMode::Vacuum)
        return vacuum_string_image(rap.band_value(xi_center), n, rap);

    const Band band = rap.medium().classify(xi_center);
    if (band == Band::Gap)
        throw OutOfBandError("band_string_image: center lies inside the gap");
    const double H = rap.band_value(xi_center);
    BetheString s = build_string(H, n, rap.atoms().beta);

    std::vector<Complex> freqs(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        const Complex hj = s.rapidities[static_cast<size_t>(j)];
        if (std::abs(hj.imag()) < kRealRapidityTol) {
            freqs[static_cast<size_t>(j)] = Complex(xi_center, 0.0);
        } else if (hj.imag() > 0.0) {
            freqs[static_cast<size_t>(j)] = map_rapidity_near_band(hj, xi_center, rap);
        }
    }
    // Lower members mirror their conjugate partners exactly.
    for (int j = 0; j < n; ++j) {
        const Complex hj = s.rapidities[static_cast<size_t>(j)];
        if (hj.imag() < -kRealRapidityTol)
            freqs[static_cast<size_t>(j)] = std::conj(freqs[static_cast<size_t>(n - 1 - j)]);
    }
    std::vector<Complex> moms(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        const Complex w = freqs[static_cast<size_t>(j)];
        const HalfPlane side = w.imag() >= 0.0 ? HalfPlane::Upper : HalfPlane::Lower;
        moms[static_cast<size_t>(j)] = rap.wavenumber(w, side);
    }
    const SolitonKind kind =
        n == 1 ? SolitonKind::SinglePolariton : SolitonKind::OrdinarySoliton;
    return assemble_image(kind, std::move(s), std::move(freqs), std::move(moms));
}

} // namespace gapsit
