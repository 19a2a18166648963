#include "omx/stability.hpp"

#include "omx/noise.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace omx {

DriftMatrix drift_matrix(const SystemParams& p) {
    const Complex I(0, 1);
    const Complex drive = p.drive();
    const double ak = p.a_disp * p.kappa * p.abar;
    // oscillator row couplings (x_bar = 0 uncoupled steady state, abar real)
    const Complex c_to_d = I * ak - I * (p.b_diss / 2.0) * std::conj(drive);
    const Complex c_to_ddag = I * ak - I * (p.b_diss / 2.0) * drive;
    // cavity row coupling to c and c+ (equal: the displacement c + c+ drives d)
    const Complex d_to_x = I * ak - p.kappa * p.b_diss * p.abar / 2.0 - I * drive * p.b_diss / 2.0;

    DriftMatrix m;
    m.a.setZero();
    m.a(0, 0) = Complex(-p.gamma / 2.0, -p.omega_m);
    m.a(0, 2) = c_to_d;
    m.a(0, 3) = c_to_ddag;
    m.a(2, 0) = d_to_x;
    m.a(2, 1) = d_to_x;
    m.a(2, 2) = Complex(-p.kappa / 2.0, p.delta);

    m.b.setZero();
    const double root_g = std::sqrt(p.gamma);
    const double root_k = std::sqrt(p.kappa);
    const double bk = (p.b_diss / 2.0) * root_k * p.abar;
    m.b(0, 0) = -root_g;
    m.b(0, 2) = -bk;
    m.b(0, 3) = bk;
    m.b(2, 2) = -root_k;

    // conjugate rows with the (1<->2, 3<->4) column swap
    const auto mirror = [](Eigen::Matrix4cd& mat, int src, int dst) {
        const int swap[4] = {1, 0, 3, 2};
        for (int j = 0; j < 4; ++j) mat(dst, swap[j]) = std::conj(mat(src, j));
    };
    mirror(m.a, 0, 1);
    mirror(m.a, 2, 3);
    mirror(m.b, 0, 1);
    mirror(m.b, 2, 3);
    return m;
}

StabilityVerdict is_stable(const SystemParams& p) {
    const DriftMatrix m = drift_matrix(p);
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(m.a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("is_stable: eigensolver did not converge");
    double max_re = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i) max_re = std::max(max_re, solver.eigenvalues()[i].real());
    return {max_re < 0.0, max_re};
}

std::array<double, 4> char_poly(const Eigen::Matrix4cd& m) {
    // Faddeev-LeVerrier: M_k = m (M_{k-1} + c_{k-1} I), c_k = -tr(M_k)/k
    std::array<double, 4> c{};
    Eigen::Matrix4cd mk = m;
    Complex ck = -mk.trace();
    c[0] = ck.real();
    for (int k = 2; k <= 4; ++k) {
        mk = m * (mk + ck * Eigen::Matrix4cd::Identity());
        ck = -mk.trace() / static_cast<double>(k);
        c[k - 1] = ck.real();
    }
    return c;
}

bool routh_hurwitz_stable(const SystemParams& p) {
    const auto c = char_poly(drift_matrix(p).a);
    const double a3 = c[0], a2 = c[1], a1 = c[2], a0 = c[3];
    const double d2 = a3 * a2 - a1;
    const double d3 = a1 * d2 - a3 * a3 * a0;
    return a3 > 0.0 && d2 > 0.0 && d3 > 0.0 && a0 > 0.0;
}

StabilityMap stability_map(const SystemParams& base, const std::vector<double>& delta_grid,
                           const std::vector<double>& coupling_grid, CouplingType which) {
    if (delta_grid.empty() || coupling_grid.empty())
        throw std::invalid_argument("stability_map: grids must be nonempty");
    const double eps = 1e-12 * base.kappa;
    StabilityMap map;
    map.delta_grid = delta_grid;
    map.coupling_grid = coupling_grid;
    const std::size_t nd = delta_grid.size(), nc = coupling_grid.size();
    map.stable.assign(nd, std::vector<bool>(nc, false));
    map.marginal.assign(nd, std::vector<bool>(nc, false));
    map.max_re_eig.assign(nd, std::vector<double>(nc, 0.0));
    map.gamma_tot.assign(nd, std::vector<double>(nc, 0.0));
    map.poisoned.assign(nd, std::vector<bool>(nc, false));
    for (std::size_t i = 0; i < nd; ++i) {
        for (std::size_t j = 0; j < nc; ++j) {
            const SystemParams p =
                base.with_delta(delta_grid[i]).with_coupling(which, coupling_grid[j]);
            map.gamma_tot[i][j] = p.gamma + rates(p).gamma_opt;
            try {
                const StabilityVerdict v = is_stable(p);
                map.stable[i][j] = v.stable;
                map.marginal[i][j] = std::abs(v.max_re_eig) <= eps;
                map.max_re_eig[i][j] = v.max_re_eig;
            } catch (const std::runtime_error&) {
                map.poisoned[i][j] = true;
                map.max_re_eig[i][j] = std::numeric_limits<double>::quiet_NaN();
            }
        }
    }
    return map;
}

}  // namespace omx
