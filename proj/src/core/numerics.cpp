#include "numerics.hpp"

#include <cmath>

namespace gapsit {

double bisect_then_newton(const Fn1& f, double lo, double hi, double f_tol,
                          const SolverConfig& cfg,
                          const std::optional<Fn1>& df) {
    if (!(lo < hi))
        throw ValidationError("bisect_then_newton: bracket must satisfy lo < hi");
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NoSignChangeError("bisect_then_newton: no sign change on bracket");

    // Phase 1: bisection until the bracket is narrow enough to seed Newton.
    const double bisect_width = 1e-6 * std::max(1.0, std::abs(lo) + std::abs(hi));
    int iter = 0;
    while (hi - lo > bisect_width && iter < cfg.max_iter_1d) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        ++iter;
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }

    // Phase 2: Newton, kept inside the bracket.
    double x = 0.5 * (lo + hi);
    double fx = f(x);
    while (iter < cfg.max_iter_1d) {
        if (std::abs(fx) < f_tol) return x;
        double slope;
        if (df) {
            slope = (*df)(x);
        } else {
            const double h = cfg.fd_step * std::max(1.0, std::abs(x));
            slope = (f(x + h) - f(x - h)) / (2.0 * h);
        }
        double next;
        if (slope != 0.0 && std::isfinite(slope)) {
            next = x - fx / slope;
        } else {
            next = 0.5 * (lo + hi);
        }
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        // Maintain the bracket.
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        x = next;
        fx = f(x);
        ++iter;
    }
    if (std::abs(fx) < f_tol) return x;
    throw NoConvergenceError("bisect_then_newton: iteration cap reached");
}

Vec2 newton2d(const Fn2& f, Vec2 x, double f_tol, const SolverConfig& cfg) {
    auto norm_inf = [](const Vec2& v) {
        return std::max(std::abs(v[0]), std::abs(v[1]));
    };
    Vec2 fx = f(x);
    for (int iter = 0; iter < cfg.max_iter_2d; ++iter) {
        if (norm_inf(fx) < f_tol) return x;

        // Forward-difference Jacobian.
        double jac[2][2];
        for (int c = 0; c < 2; ++c) {
            const double h = cfg.fd_step * std::max(1.0, std::abs(x[c]));
            Vec2 xp = x;
            xp[c] += h;
            const Vec2 fp = f(xp);
            jac[0][c] = (fp[0] - fx[0]) / h;
            jac[1][c] = (fp[1] - fx[1]) / h;
        }
        const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        const double scale = std::max({std::abs(jac[0][0]), std::abs(jac[0][1]),
                                       std::abs(jac[1][0]), std::abs(jac[1][1]),
                                       1e-300});
        if (std::abs(det) < 1e-14 * scale * scale)
            throw SingularJacobianError("newton2d: singular Jacobian");

        const Vec2 step = {(-fx[0] * jac[1][1] + fx[1] * jac[0][1]) / det,
                           (-fx[1] * jac[0][0] + fx[0] * jac[1][0]) / det};

        // Backtracking line search on the residual norm.
        double lambda = 1.0;
        const double f0 = norm_inf(fx);
        for (int ls = 0; ls < 40; ++ls) {
            const Vec2 trial = {x[0] + lambda * step[0], x[1] + lambda * step[1]};
            Vec2 ft;
            bool ok = true;
            try {
                ft = f(trial);
            } catch (const Error&) {
                ok = false;
            }
            if (ok && std::isfinite(ft[0]) && std::isfinite(ft[1]) &&
                norm_inf(ft) < f0) {
                x = trial;
                fx = ft;
                break;
            }
            lambda *= 0.5;
            if (ls == 39)
                throw NoConvergenceError("newton2d: line search stalled");
        }
    }
    if (norm_inf(fx) < f_tol) return x;
    throw NoConvergenceError("newton2d: iteration cap reached");
}

double fd_derivative(const Fn1& f, double x, double step) {
    if (!(step > 0.0))
        throw ValidationError("fd_derivative: step must be > 0");
    return (f(x + step) - f(x - step)) / (2.0 * step);
}

std::vector<double> linspace(double start, double stop, int points) {
    if (points < 2)
        throw ValidationError("linspace: points must be >= 2");
    if (!(start < stop))
        throw ValidationError("linspace: start must be < stop");
    std::vector<double> out(static_cast<size_t>(points));
    const double step = (stop - start) / (points - 1);
    for (int i = 0; i < points; ++i)
        out[static_cast<size_t>(i)] = start + step * i;
    out.back() = stop;
    return out;
}

} // namespace gapsit
