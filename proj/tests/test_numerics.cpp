#include <doctest.h>

#include <cmath>

#include "core/numerics.hpp"

using namespace gapsit;

TEST_CASE("bisect_then_newton solves x^2 - 2 on [1, 2]") {
    SolverConfig cfg;
    const double root = bisect_then_newton(
        [](double x) { return x * x - 2.0; }, 1.0, 2.0, cfg.abs_tol, cfg);
    CHECK(root == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("bisect_then_newton solves the identity through zero") {
    SolverConfig cfg;
    const double root =
        bisect_then_newton([](double x) { return x; }, -1.0, 1.0, cfg.abs_tol, cfg);
    CHECK(std::abs(root) < 1e-12);
}

TEST_CASE("bisect_then_newton rejects a bracket without sign change") {
    SolverConfig cfg;
    CHECK_THROWS_AS(bisect_then_newton([](double x) { return x * x + 1.0; }, -1.0,
                                       1.0, cfg.abs_tol, cfg),
                    NoSignChangeError);
}

TEST_CASE("newton2d solves a linear system in one step region") {
    SolverConfig cfg;
    const Vec2 sol = newton2d(
        [](const Vec2& v) -> Vec2 { return {v[0] - 1.0, v[1] - 2.0}; }, {0.0, 0.0},
        cfg.abs_tol, cfg);
    CHECK(sol[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sol[1] == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("newton2d solves (x^2 - y, y - 4) from seed (1, 3)") {
    SolverConfig cfg;
    const Vec2 sol = newton2d(
        [](const Vec2& v) -> Vec2 { return {v[0] * v[0] - v[1], v[1] - 4.0}; },
        {1.0, 3.0}, cfg.abs_tol, cfg);
    CHECK(sol[0] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(sol[1] == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("newton2d reports a singular Jacobian") {
    SolverConfig cfg;
    CHECK_THROWS_AS(
        newton2d([](const Vec2& v) -> Vec2 { return {v[0] + v[1] - 1.0, v[0] + v[1] + 1.0}; },
                 {0.0, 0.0}, cfg.abs_tol, cfg),
        SingularJacobianError);
}

TEST_CASE("fd_derivative basics") {
    CHECK(fd_derivative([](double x) { return std::sin(x); }, 0.0, 1e-6) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(fd_derivative([](double) { return 3.5; }, 1.0, 1e-6)) < 1e-12);
}

TEST_CASE("fd_derivative error scales as step^2") {
    auto f = [](double x) { return std::sin(x); };
    const double x0 = 0.7;
    const double exact = std::cos(x0);
    const double e1 = std::abs(fd_derivative(f, x0, 1e-2) - exact);
    const double e2 = std::abs(fd_derivative(f, x0, 1e-3) - exact);
    const double e3 = std::abs(fd_derivative(f, x0, 1e-4) - exact);
    const double slope12 = std::log(e1 / e2) / std::log(10.0);
    const double slope23 = std::log(e2 / e3) / std::log(10.0);
    CHECK(slope12 == doctest::Approx(2.0).epsilon(0.05));
    CHECK(slope23 == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("Newton iterates converge quadratically on a smooth fixture") {
    // e_{k+1} ~ C e_k^2 on f(x) = x^2 - 2 starting from x = 2.
    const double target = std::sqrt(2.0);
    double x = 2.0;
    double prev_err = std::abs(x - target);
    double prev_prev_err = 0.0;
    for (int k = 0; k < 4; ++k) {
        x = x - (x * x - 2.0) / (2.0 * x);
        prev_prev_err = prev_err;
        prev_err = std::abs(x - target);
    }
    // After four steps the error is far below quadratic contraction of the
    // previous one with a modest constant.
    CHECK(prev_err <= 1.0 * prev_prev_err * prev_prev_err + 1e-15);
}

TEST_CASE("linspace covers endpoints and validates input") {
    const auto g = linspace(0.0, 1.0, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    CHECK(g[2] == doctest::Approx(0.5));
    CHECK_THROWS_AS(linspace(0.0, 1.0, 1), ValidationError);
    CHECK_THROWS_AS(linspace(1.0, 0.0, 5), ValidationError);
}
