#pragma once

#include <functional>

// Adaptive Gauss-Kronrod (G7/K15) quadrature with worst-interval-first
// subdivision. Semi-infinite ranges use the substitution t = a + u/(1-u),
// dt = du/(1-u)^2, mapping [a, inf) onto [0, 1).

namespace arlb::quad {

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
};

struct Result {
    double value = 0.0;
    double err_estimate = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

using Fn = std::function<double(double)>;

// Integral of f over the finite interval [a, b].
Result integrate(const Fn& f, double a, double b, const QuadratureSpec& spec = {});

// Integral of f over [a, inf).
Result integrate_to_inf(const Fn& f, double a, const QuadratureSpec& spec = {});

// Same, but throws std::runtime_error when the subdivision cap is exceeded.
double integrate_or_throw(const Fn& f, double a, double b, const QuadratureSpec& spec = {});
double integrate_to_inf_or_throw(const Fn& f, double a, const QuadratureSpec& spec = {});

} // namespace arlb::quad
