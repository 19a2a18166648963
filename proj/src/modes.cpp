#include "omx/modes.hpp"

#include <cmath>
#include <stdexcept>

namespace omx {

namespace detail {

EigenPair eigenpair(double omega_m, double kappa, double gamma, double delta, double a_disp,
                    double b_diss, double abar) {
    const Complex cavity(-delta, -kappa / 2.0);
    const Complex mechanical(omega_m, -gamma / 2.0);
    const Complex mean = 0.5 * (cavity + mechanical);
    const Complex half_diff = 0.5 * (cavity - mechanical);
    const Complex drive = abar * Complex(delta, kappa / 2.0);
    const Complex g = b_diss * drive / 2.0 - a_disp * abar * kappa;
    Complex root = std::sqrt(half_diff * half_diff + std::norm(g));
    if (root.real() < 0.0 || (root.real() == 0.0 && root.imag() < 0.0)) root = -root;
    return {mean + root, mean - root};
}

}  // namespace detail

EigenPair eigenvalues(const SystemParams& p) {
    return detail::eigenpair(p.omega_m, p.kappa, p.gamma, p.delta, p.a_disp, p.b_diss, p.abar);
}

CriticalCouplings critical_coupling(const SystemParams& p) {
    if (p.kappa <= p.gamma)
        throw std::domain_error("critical_coupling: requires kappa > gamma");
    const double excess = p.kappa - p.gamma;
    return {excess / (4.0 * p.kappa),
            excess / std::sqrt(4.0 * p.omega_m * p.omega_m + p.kappa * p.kappa)};
}

double min_split_detuning(const SystemParams& p) {
    if (p.a_disp != 0.0)
        throw std::domain_error("min_split_detuning: defined for purely dissipative coupling");
    const double ba = p.b_diss * p.abar;
    return -p.omega_m / (1.0 + ba * ba);
}

}  // namespace omx
