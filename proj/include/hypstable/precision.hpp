#pragma once

#include <stdexcept>

namespace hypstable {

/// Tolerances and iteration caps shared by series evaluation and quadrature.
struct EvalPrecision {
    double rel_tol = 1e-12;          // relative tolerance, in (0, 1e-3]
    int max_terms = 10000;           // series term cap, >= 64
    int max_quad_subdivisions = 2000;
    double z_switch = 0.5;           // series/transform switchover for 2F1

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol <= 1e-3))
            throw std::invalid_argument("EvalPrecision: rel_tol must be in (0, 1e-3]");
        if (max_terms < 64)
            throw std::invalid_argument("EvalPrecision: max_terms must be >= 64");
        if (max_quad_subdivisions < 1)
            throw std::invalid_argument("EvalPrecision: max_quad_subdivisions must be >= 1");
    }
};

/// Thrown when a series or quadrature fails to reach the requested tolerance.
class no_convergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hypstable
