#pragma once

#include <functional>
#include <vector>

namespace omx {

struct QuadratureSettings {
    double window_factor = 50.0;  // half-window in units of omega_m
    int nodes = 1 << 16;          // approximate total evaluation budget
    double rel_tol = 1e-6;
    double abs_floor = 1e-12;
};

struct IntegralEstimate {
    double value = 0.0;
    double error = 0.0;  // absolute error estimate
    bool converged = true;
};

using RealFn = std::function<double(double)>;

// Composite fixed-order Gauss-Legendre rule over [a, b].
double gauss_panels(const RealFn& f, double a, double b, int panels);

// Adaptive Simpson over the union of [breakpoints_i, breakpoints_{i+1}].
// Breakpoints must be sorted; duplicates are ignored. Panels are bisected
// until the local Simpson error estimate drops below the scaled tolerance.
IntegralEstimate adaptive_integrate(const RealFn& f, const std::vector<double>& breakpoints,
                                    double rel_tol, double abs_floor, int max_depth = 52);

}  // namespace omx
