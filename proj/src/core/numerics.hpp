#ifndef GAPSIT_NUMERICS_HPP
#define GAPSIT_NUMERICS_HPP

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "solver_config.hpp"

namespace gapsit {

using Fn1 = std::function<double(double)>;
using Vec2 = std::array<double, 2>;
using Fn2 = std::function<Vec2(const Vec2&)>;

/// Bracketed 1D root finding: bisection down to a narrow bracket, then
/// Newton polishing (finite-difference slope unless an analytic one is
/// given).  Newton steps that leave the bracket fall back to bisection.
double bisect_then_newton(const Fn1& f, double lo, double hi, double f_tol,
                          const SolverConfig& cfg,
                          const std::optional<Fn1>& df = std::nullopt);

/// Damped 2D Newton with a forward-difference Jacobian.
Vec2 newton2d(const Fn2& f, Vec2 seed, double f_tol, const SolverConfig& cfg);

/// Centered finite difference (f(x+h) - f(x-h)) / 2h.
double fd_derivative(const Fn1& f, double x, double step);

/// points >= 2 equally spaced values covering [start, stop].
std::vector<double> linspace(double start, double stop, int points);

} // namespace gapsit

#endif
