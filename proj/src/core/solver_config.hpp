#ifndef GAPSIT_SOLVER_CONFIG_HPP
#define GAPSIT_SOLVER_CONFIG_HPP

#include "errors.hpp"

namespace gapsit {

/// Tolerances and iteration caps shared by every solver in the library.
/// Threaded explicitly through the modules; there are no global knobs.
struct SolverConfig {
    double abs_tol = 1e-12;        // residual target for root finding
    double rel_tol = 1e-12;        // relative target where a scale exists
    int max_iter_1d = 200;
    int max_iter_2d = 100;
    double fd_step = 1e-7;         // relative finite-difference step
    double edge_exclusion = 1e-9;  // relative radius around poles/edges

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw ValidationError("solver: tolerances must be > 0");
        if (max_iter_1d < 1 || max_iter_2d < 1)
            throw ValidationError("solver: max_iter must be >= 1");
        if (!(fd_step > 0.0) || !(edge_exclusion > 0.0))
            throw ValidationError("solver: fd_step and edge_exclusion must be > 0");
    }
};

} // namespace gapsit

#endif
