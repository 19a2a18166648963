#pragma once

#include "omx/params.hpp"

#include <Eigen/Core>

#include <array>
#include <vector>

namespace omx {

// Linearized fluctuation dynamics v' = a v + b n on v = (c, c+, d, d+) with
// noise vector n = (eta, eta+, xi_in, xi_in+). Rows 2 and 4 are the
// elementwise conjugates of rows 1 and 3 with columns swapped (1<->2, 3<->4),
// so the eigenvalue set is closed under conjugation.
struct DriftMatrix {
    Eigen::Matrix4cd a;
    Eigen::Matrix4cd b;
};

DriftMatrix drift_matrix(const SystemParams& p);

struct StabilityVerdict {
    bool stable;         // all eigenvalue real parts < 0 (ties count as unstable)
    double max_re_eig;   // growth rate of the least stable mode
};

// Dense eigensolve of the 4x4 drift matrix. Throws std::runtime_error on
// eigensolver non-convergence.
StabilityVerdict is_stable(const SystemParams& p);

// Characteristic polynomial lambda^4 + c[0] l^3 + c[1] l^2 + c[2] l + c[3]
// via Faddeev-LeVerrier; coefficients are real by the conjugation symmetry.
std::array<double, 4> char_poly(const Eigen::Matrix4cd& m);

// Routh-Hurwitz test on the real quartic; independent second opinion next to
// the eigensolver verdict.
bool routh_hurwitz_stable(const SystemParams& p);

struct StabilityMap {
    std::vector<double> delta_grid;
    std::vector<double> coupling_grid;  // coupling*abar products
    // Row-major [delta][coupling]:
    std::vector<std::vector<bool>> stable;
    std::vector<std::vector<bool>> marginal;  // |max_re_eig| <= 1e-12 kappa
    std::vector<std::vector<double>> max_re_eig;
    std::vector<std::vector<double>> gamma_tot;
    std::vector<std::vector<bool>> poisoned;  // per-cell solver failure
};

StabilityMap stability_map(const SystemParams& base, const std::vector<double>& delta_grid,
                           const std::vector<double>& coupling_grid, CouplingType which);

}  // namespace omx
