#include <doctest.h>

#include <cmath>

#include "core/medium.hpp"
#include "core/numerics.hpp"

using namespace gapsit;

namespace {
Medium reference_medium() { return Medium({1.0, 2.0, 1.0}); }
} // namespace

TEST_CASE("permeability fixtures on the real axis") {
    const Medium med = reference_medium();
    CHECK(med.permeability({0.5, 0.0}).real() == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(std::abs(med.permeability({2.0, 0.0}).real()) < 1e-14);
    CHECK(med.permeability({1.5, 0.0}).real() ==
          doctest::Approx(-1.4).epsilon(1e-12));
}

TEST_CASE("permeability raises inside the pole exclusion radius") {
    const Medium med = reference_medium();
    CHECK_THROWS_AS(med.permeability({1.0 + 1e-12, 0.0}), PoleError);
    CHECK_THROWS_AS(med.permeability({-1.0, 1e-11}), PoleError);
}

TEST_CASE("refractive index branch values") {
    const Medium med = reference_medium();
    const Complex lower = med.refractive_index({0.5, 0.0}, HalfPlane::Upper);
    CHECK(lower.real() == doctest::Approx(2.2360679774997897).epsilon(1e-12));
    CHECK(lower.imag() == 0.0);

    const Complex above = med.refractive_index({1.5, 0.0}, HalfPlane::Upper);
    CHECK(above.real() == doctest::Approx(0.0).scale(1.0));
    CHECK(above.imag() == doctest::Approx(1.1832159566199232).epsilon(1e-12));
    const Complex below = med.refractive_index({1.5, 0.0}, HalfPlane::Lower);
    CHECK(below.imag() == doctest::Approx(-1.1832159566199232).epsilon(1e-12));

    CHECK(med.refractive_index({1e8, 0.0}, HalfPlane::Upper).real() ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("branch consistency: n(xi + i eta) -> +i nu with error O(eta)") {
    const Medium med = reference_medium();
    const double xi = 1.5;
    const double nu = med.nu(xi);
    const double e1 =
        std::abs(med.refractive_index({xi, 1e-6}, HalfPlane::Upper) - Complex(0.0, nu));
    const double e2 =
        std::abs(med.refractive_index({xi, 1e-7}, HalfPlane::Upper) - Complex(0.0, nu));
    CHECK(e1 < 1e-5);
    CHECK(e2 < 1.5e-1 * e1); // linear decay in eta
}

TEST_CASE("Schwarz symmetry across the real axis") {
    const Medium med = reference_medium();
    for (const Complex w : {Complex(0.5, 0.3), Complex(1.5, 0.2), Complex(3.0, 1.0),
                            Complex(1.2, 0.05)}) {
        const Complex up = med.refractive_index(w, HalfPlane::Upper);
        const Complex dn = med.refractive_index(std::conj(w), HalfPlane::Lower);
        CHECK(std::abs(dn - std::conj(up)) < 1e-14 * std::abs(up));
    }
}

TEST_CASE("nu fixtures and domain errors") {
    const Medium med = reference_medium();
    CHECK(med.nu(1.5) == doctest::Approx(1.1832159566199232).epsilon(1e-12));
    CHECK(med.nu(2.0 - 1e-6) < 2e-3);
    CHECK_THROWS_AS(med.nu(0.5), OutOfGapError);
    CHECK_THROWS_AS(med.nu(3.0), OutOfGapError);
    CHECK_THROWS_AS(med.nu(1.0 + 1e-10), OutOfGapError);
}

TEST_CASE("wavenumber fixtures") {
    const Medium med = reference_medium();
    CHECK(med.wavenumber({0.5, 0.0}, HalfPlane::Upper).real() ==
          doctest::Approx(1.1180339887498949).epsilon(1e-12));
    const Complex kplus = med.wavenumber({3.0, 0.0}, HalfPlane::Upper);
    CHECK(kplus.real() > 0.0);
    CHECK(kplus.imag() == 0.0);
    const Complex kgap = med.wavenumber({1.5, 0.0}, HalfPlane::Upper);
    CHECK(std::abs(kgap.real()) < 1e-14);
    CHECK(kgap.imag() == doctest::Approx(1.7748239349298848).epsilon(1e-12));
}

TEST_CASE("kappa fixtures and monotonic decrease above omega12") {
    const Medium med = reference_medium();
    CHECK(med.kappa(1.5) == doctest::Approx(1.7748239349298848).epsilon(1e-12));
    CHECK(med.kappa(2.0 - 1e-7) < 1e-2);
    double prev = med.kappa(1.5);
    for (double xi : linspace(1.5 + 1e-3, 2.0 - 1e-3, 1000)) {
        const double cur = med.kappa(xi);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("kappa_prime analytic value, FD agreement, sign, overflow guard") {
    const Medium med = reference_medium();
    CHECK(med.kappa_prime(1.5) == doctest::Approx(-2.4678504238072686).epsilon(1e-12));
    for (double xi : linspace(1.05, 1.95, 37)) {
        const double fd = fd_derivative([&](double x) { return med.kappa(x); }, xi, 1e-6);
        CHECK(med.kappa_prime(xi) == doctest::Approx(fd).epsilon(1e-6));
    }
    for (double xi : linspace(1.5, 1.99, 25))
        CHECK(med.kappa_prime(xi) < 0.0);
    CHECK_THROWS_AS(med.kappa_prime(2.0 - 1e-10), DerivativeOverflowError);
}

TEST_CASE("form factor fixtures") {
    const Medium med = reference_medium();
    CHECK(med.form_factor(0.5, 1.5) ==
          doctest::Approx(3.7267799624996495).epsilon(1e-12));
    CHECK_THROWS_AS(med.form_factor(1.5, 1.5), OutOfBandError);
    CHECK(med.form_factor(2.0 + 1e-6, 1.5) < 1e-3);
    // Vacuum normalization: with n ~= 1 and omega = omega12, z ~= 1.
    const Medium vac({1e6, 1e6 + 1.0, 1.0});
    CHECK(vac.form_factor(1.5, 1.5) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("classify fixtures and edge errors") {
    const Medium med = reference_medium();
    CHECK(med.classify(0.5) == Band::LowerBranch);
    CHECK(med.classify(1.5) == Band::Gap);
    CHECK(med.classify(3.0) == Band::UpperBranch);
    CHECK_THROWS_AS(med.classify(1.0 + 1e-10), EdgeError);
    CHECK_THROWS_AS(med.classify(2.0 - 1e-10), EdgeError);
    CHECK_THROWS_AS(med.classify(1e-10), EdgeError);
    CHECK_THROWS_AS(med.classify(-0.5), ValidationError);
}

TEST_CASE("epsilon is negative exactly on the gap (grid property)") {
    const Medium med = reference_medium();
    for (double xi : linspace(1e-3, 6.0 - 1e-3, 1000)) {
        if (std::abs(xi - 1.0) < 1e-6 || std::abs(xi - 2.0) < 1e-6) continue;
        const double eps = med.permeability({xi, 0.0}).real();
        const bool in_gap = xi > 1.0 && xi < 2.0;
        CHECK((eps < 0.0) == in_gap);
    }
}

TEST_CASE("vacuum degeneration: far gap gives eps -> 1 and k -> omega/c") {
    const Medium med({1e6, 1e6 + 1.0, 1.0});
    const double omega = 0.5;
    CHECK(std::abs(med.permeability({omega, 0.0}).real() - 1.0) < 3e-6);
    CHECK(std::abs(med.wavenumber({omega, 0.0}, HalfPlane::Upper).real() - omega) <
          2e-6 * omega);
}

TEST_CASE("medium parameter validation") {
    CHECK_THROWS_AS(Medium({2.0, 1.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(Medium({0.0, 1.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(Medium({1.0, 2.0, 0.0}), ValidationError);
}
