#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "core/numerics.hpp"
#include "core/strings.hpp"

using namespace gapsit;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Fixture {
    Medium med{MediumParams{1.0, 2.0, 1.0}};
    AtomChainParams atoms = AtomChainParams::make(1.5, 0.01, 0.01, 1.0, 1000.0);
    Rapidity fgm{med, atoms, RapidityMode::FGM};
};

/// Solves the quantization condition
///   n K L - 2 M atan(n beta / (2 H)) = 2 pi m
/// for H > 0 near H0, using the vacuum map K = omega12 (1 + H) / c.
double quantize_vacuum_H(double H0, int n, const Rapidity& rap) {
    const AtomChainParams& a = rap.atoms();
    const double c = rap.medium().params().c;
    auto phase = [&](double H) {
        const double K = a.omega12 * (1.0 + H) / c;
        return n * K * a.length -
               2.0 * static_cast<double>(a.m_atoms) *
                   std::atan(n * a.beta / (2.0 * H));
    };
    const double m = std::floor(phase(H0) / (2.0 * kPi));
    auto f = [&](double H) { return phase(H) - 2.0 * kPi * m; };
    double lo = H0;
    while (f(lo) > 0.0) lo *= 0.98; // phase is increasing in H
    SolverConfig cfg;
    return bisect_then_newton(f, lo, H0 * 1.02, 1e-13, cfg);
}

} // namespace

TEST_CASE("build_string produces the equally spaced conjugate-closed set") {
    const BetheString one = build_string(0.3, 1, 0.01);
    REQUIRE(one.rapidities.size() == 1);
    CHECK(one.rapidities[0] == Complex(0.3, 0.0));

    const BetheString pair = build_string(0.0, 2, 0.01);
    CHECK(pair.rapidities[0] == Complex(0.0, 0.005));
    CHECK(pair.rapidities[1] == Complex(0.0, -0.005));

    const BetheString triple = build_string(-0.05, 3, 0.01);
    CHECK(triple.rapidities[0] == Complex(-0.05, 0.01));
    CHECK(triple.rapidities[1] == Complex(-0.05, 0.0));
    CHECK(triple.rapidities[2] == Complex(-0.05, -0.01));

    for (int n : {1, 2, 3, 4, 7}) {
        const BetheString s = build_string(-0.2, n, 0.01);
        double im_sum = 0.0;
        for (int j = 0; j < n; ++j) {
            im_sum += s.rapidities[static_cast<size_t>(j)].imag();
            CHECK(s.rapidities[static_cast<size_t>(j)] ==
                  std::conj(s.rapidities[static_cast<size_t>(n - 1 - j)]));
        }
        CHECK(std::abs(im_sum) < 1e-15);
    }
    CHECK_THROWS_AS(build_string(0.0, 0, 0.01), ValidationError);
    CHECK_THROWS_AS(build_string(0.0, 2, 0.0), ValidationError);
}

TEST_CASE("two_particle_phase fixtures") {
    CHECK(two_particle_phase({0.1, 0.0}, {0.1, 0.0}, 0.01) == Complex(-1.0, 0.0));
    const Complex r = two_particle_phase({0.02, 0.0}, {0.01, 0.0}, 0.01);
    CHECK(std::abs(r - Complex(0.0, -1.0)) < 1e-14);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 100; ++i) {
        const Complex v = two_particle_phase({u(rng), 0.0}, {u(rng), 0.0}, 0.01);
        CHECK(std::abs(v) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(two_particle_phase({0.0, -0.01}, {0.0, 0.0}, 0.01), PoleError);
}

TEST_CASE("check_nc: lower-branch strings pass, upper-branch strings fail") {
    Fixture f;
    const SolitonImage low = band_string_image(0.5, 2, f.fgm);
    CHECK(check_nc(low).ok);
    const SolitonImage high = band_string_image(3.0, 2, f.fgm);
    const NcResult nc = check_nc(high);
    CHECK_FALSE(nc.ok);
    // Both complex members violate the sign condition on the upper branch.
    for (const NcEntry& e : nc.entries)
        if (!e.exempt) CHECK_FALSE(e.ok);
    const SolitonImage single = band_string_image(3.0, 1, f.fgm);
    CHECK(check_nc(single).ok); // real rapidity is exempt
}

TEST_CASE("NC at first order: sign rule matches exact complex evaluation") {
    Fixture f;
    for (double xi : linspace(0.05, 0.95, 50)) {
        const bool first_order =
            (f.fgm.derivative(xi) > 0.0) == (f.fgm.wavenumber_derivative(xi) > 0.0);
        const Complex h = f.fgm.value({xi, 1e-4}, HalfPlane::Upper);
        const Complex k = f.fgm.wavenumber({xi, 1e-4}, HalfPlane::Upper);
        CHECK(first_order == ((h.imag() > 0.0) == (k.imag() > 0.0)));
        CHECK(first_order == check_nc(band_string_image(xi, 2, f.fgm)).ok);
    }
    for (double xi : linspace(2.02, 4.0, 50)) {
        const bool first_order =
            (f.fgm.derivative(xi) > 0.0) == (f.fgm.wavenumber_derivative(xi) > 0.0);
        const Complex h = f.fgm.value({xi, 1e-4}, HalfPlane::Upper);
        const Complex k = f.fgm.wavenumber({xi, 1e-4}, HalfPlane::Upper);
        CHECK(first_order == ((h.imag() > 0.0) == (k.imag() > 0.0)));
        CHECK(first_order == check_nc(band_string_image(xi, 2, f.fgm)).ok);
    }
}

TEST_CASE("band_string_image maps members exactly and keeps energy real") {
    Fixture f;
    for (double xi : {0.3, 0.5, 0.9, 2.5, 3.0}) {
        for (int n : {1, 2, 3, 4}) {
            const SolitonImage img = band_string_image(xi, n, f.fgm);
            // Members shift off the center at second order in beta; the
            // shift grows where dh/dxi is small (near the band edges).
            CHECK(img.eigenenergy == doctest::Approx(n * xi).epsilon(2e-2));
            for (int j = 0; j < n; ++j) {
                const size_t u = static_cast<size_t>(j);
                const Complex w = img.frequencies[u];
                const HalfPlane side =
                    w.imag() >= 0.0 ? HalfPlane::Upper : HalfPlane::Lower;
                CHECK(std::abs(f.fgm.value(w, side) - img.string.rapidities[u]) <
                      1e-11);
            }
            Complex esum(0.0, 0.0);
            for (const Complex& w : img.frequencies) esum += w;
            CHECK(std::abs(esum.imag()) < 1e-10);
        }
    }
}

TEST_CASE("bae_residuals: free single-particle quantization") {
    Medium med({1.0, 2.0, 1.0});
    // No atoms: the residual is exp(i k L) - 1.
    const double L = 2.0 * kPi * 100.0 / 1.5;
    AtomChainParams atoms = AtomChainParams::make(1.5, 0.01, 0.01, 0.0, L);
    REQUIRE(atoms.m_atoms == 0);
    Rapidity vac(med, atoms, RapidityMode::Vacuum);
    const SolitonImage img = vacuum_string_image(0.0, 1, vac); // omega = 1.5
    const auto res = bae_residuals(img, vac);
    REQUIRE(res.size() == 1);
    CHECK(std::abs(res[0]) < 1e-10);

    // Off quantization by half a period the residual has magnitude 2.
    AtomChainParams atoms2 = AtomChainParams::make(1.5, 0.01, 0.01, 0.0, L + kPi / 1.5);
    Rapidity vac2(med, atoms2, RapidityMode::Vacuum);
    const auto res2 = bae_residuals(vacuum_string_image(0.0, 1, vac2), vac2);
    CHECK(std::abs(res2[0]) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("bae_residuals: quantized vacuum strings solve the equations") {
    Medium med({1.0, 2.0, 1.0});
    AtomChainParams atoms = AtomChainParams::make(1.5, 0.01, 0.01, 1.0, 400.0);
    Rapidity vac(med, atoms, RapidityMode::Vacuum);
    for (int n : {2, 3}) {
        const double H = quantize_vacuum_H(0.01, n, vac);
        const SolitonImage img = vacuum_string_image(H, n, vac);
        const auto res = bae_residuals(img, vac);
        for (const Complex& r : res) CHECK(std::abs(r) < 1e-8);
        // The final entry is the quantization residual itself.
        CHECK(std::abs(res.back()) < 1e-12);

        // Shifting H without re-quantizing breaks at least one equation.
        const SolitonImage bad = vacuum_string_image(H + 0.1 * atoms.beta, n, vac);
        const auto res_bad = bae_residuals(bad, vac);
        double worst = 0.0;
        for (const Complex& r : res_bad) worst = std::max(worst, std::abs(r));
        CHECK(worst > 1e-3);
    }
}

TEST_CASE("bae_residuals: exact strings at H = 0 stay finite") {
    Medium med({1.0, 2.0, 1.0});
    AtomChainParams atoms = AtomChainParams::make(1.5, 0.01, 0.01, 1.0, 400.0);
    Rapidity vac(med, atoms, RapidityMode::Vacuum);
    const auto res = bae_residuals(vacuum_string_image(0.0, 2, vac), vac);
    for (const Complex& r : res) {
        CHECK(std::isfinite(r.real()));
        CHECK(std::isfinite(r.imag()));
    }
}

TEST_CASE("bae_residuals are invariant under particle relabeling") {
    Medium med({1.0, 2.0, 1.0});
    AtomChainParams atoms = AtomChainParams::make(1.5, 0.01, 0.01, 1.0, 400.0);
    Rapidity vac(med, atoms, RapidityMode::Vacuum);
    SolitonImage img = vacuum_string_image(0.013, 4, vac);
    const auto base = bae_residuals(img, vac);

    SolitonImage shuffled = img;
    const std::vector<size_t> perm = {2, 0, 3, 1};
    for (size_t j = 0; j < 4; ++j) {
        shuffled.string.rapidities[j] = img.string.rapidities[perm[j]];
        shuffled.frequencies[j] = img.frequencies[perm[j]];
        shuffled.momenta[j] = img.momenta[perm[j]];
    }
    const auto permuted = bae_residuals(shuffled, vac);
    REQUIRE(base.size() == permuted.size());
    for (size_t j = 0; j < base.size(); ++j)
        CHECK(std::abs(base[j] - permuted[j]) == 0.0);
}

TEST_CASE("approx_pair_params closed forms") {
    Fixture f;
    const TaylorAB ab = f.fgm.taylor_ab();
    const PairParams p = approx_pair_params(0.0, 1, 1, ab, f.atoms);
    CHECK(p.xi == doctest::Approx(1.5124237675445092).epsilon(1e-10));
    CHECK(p.eta == 0.0);

    const PairParams q = approx_pair_params(-0.1, 1, 1, ab, f.atoms);
    CHECK(q.eta == doctest::Approx(0.1 / ab.a).epsilon(1e-12));

    const PairParams p21 = approx_pair_params(0.0, 2, 1, ab, f.atoms);
    const PairParams p22 = approx_pair_params(0.0, 2, 2, ab, f.atoms);
    CHECK(p21.xi - p22.xi ==
          doctest::Approx(f.atoms.beta / ab.a).epsilon(1e-12));
    CHECK_THROWS_AS(approx_pair_params(0.0, 1, 2, ab, f.atoms), ValidationError);
}

TEST_CASE("solve_pair_params: residuals and limits") {
    Fixture f;
    const TaylorAB ab = f.fgm.taylor_ab();

    // H = 0: the pair sits on the real axis (eta = 0 at leading order).
    const PairParams p0 = solve_pair_params(0.0, 1, 1, f.fgm);
    CHECK(p0.residual < 1e-10);
    CHECK(std::abs(p0.eta) < 1e-9);
    CHECK(p0.xi > 1.5);
    CHECK(p0.xi < 2.0);

    // Plugging the solution back reproduces the target rapidity.
    const Complex h = f.fgm.value({p0.xi, p0.eta}, HalfPlane::Upper);
    CHECK(std::abs(h - Complex(0.0, f.atoms.beta * 0.5)) < 1e-10);

    // beta -> 0 limit approaches the closed form.
    AtomChainParams tiny = AtomChainParams::make(1.5, 1e-6, 0.01, 1.0, 1000.0);
    Rapidity rap_tiny(f.med, tiny, RapidityMode::FGM);
    const PairParams pt = solve_pair_params(0.0, 1, 1, rap_tiny);
    const PairParams at = approx_pair_params(0.0, 1, 1, rap_tiny.taylor_ab(), tiny);
    CHECK(std::abs(pt.xi - at.xi) < 1e-9);

    // Residual definition check with a nonzero carrying rapidity.
    const PairParams ph = solve_pair_params(-0.05, 2, 1, f.fgm);
    const Complex hh = f.fgm.value({ph.xi, ph.eta}, HalfPlane::Upper);
    CHECK(std::abs(hh - Complex(-0.05, f.atoms.beta * 1.5)) < 1e-10);
    CHECK(ph.eta > 0.0);
    (void)ab;
}

TEST_CASE("solve_pair_params converges quickly from the closed-form seed") {
    Fixture f;
    for (int l = 1; l <= 4; ++l)
        for (int j = 1; j <= l; ++j) {
            const PairParams p = solve_pair_params(-0.01, l, j, f.fgm);
            CHECK(p.residual < 1e-10);
            CHECK(p.xi > 1.5);
            CHECK(p.xi < 2.0);
        }
}
