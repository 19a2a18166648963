#include "omx/response.hpp"

#include <stdexcept>

namespace omx {

namespace detail {

Complex cavity_response(const SystemParams& p, Complex omega) {
    return 1.0 / (Complex(p.kappa / 2.0, 0.0) - Complex(0, 1) * (omega + p.delta));
}

Complex cavity_response_conj_neg(const SystemParams& p, Complex omega) {
    // conj(chi_c(-w)) for real w, continued off the axis
    return 1.0 / (Complex(p.kappa / 2.0, 0.0) - Complex(0, 1) * (omega - p.delta));
}

Complex self_energy(const SystemParams& p, Complex omega) {
    const Complex c1 = cavity_response(p, omega);
    const Complex c2 = cavity_response_conj_neg(p, omega);
    const Complex u(p.kappa / 2.0, p.delta);   // i delta + kappa/2
    const Complex ub(-p.kappa / 2.0, p.delta); // i delta - kappa/2
    const double a2 = p.a_disp * p.kappa * p.abar;
    const Complex sig_a = Complex(0, -1) * (a2 * a2) * (c1 - c2);
    const double b2 = (p.b_diss / 2.0) * p.abar;
    const Complex sig_b = Complex(0, 1) * (b2 * b2) * (c1 * u * u - c2 * ub * ub);
    const Complex sig_ab =
        p.b_diss * p.a_disp * p.kappa * p.abar * p.abar * (c1 * u - c2 * ub);
    return sig_a + sig_b + sig_ab;
}

Complex n_denominator(const SystemParams& p, Complex omega) {
    const Complex inv_m = Complex(p.gamma / 2.0, 0.0) - Complex(0, 1) * (omega - p.omega_m);
    const Complex inv_m_neg = Complex(p.gamma / 2.0, 0.0) - Complex(0, 1) * (omega + p.omega_m);
    return inv_m * inv_m_neg + 2.0 * p.omega_m * self_energy(p, omega);
}

}  // namespace detail

Complex cavity_response(const SystemParams& p, double omega) {
    return 1.0 / Complex(p.kappa / 2.0, -(omega + p.delta));
}

Complex mech_response(const SystemParams& p, double omega) {
    if (p.gamma == 0.0 && omega == p.omega_m)
        throw std::domain_error("mech_response: pole at omega = omega_m for gamma = 0");
    return 1.0 / Complex(p.gamma / 2.0, -(omega - p.omega_m));
}

Complex alpha(const SystemParams& p, double omega) {
    const Complex chi = cavity_response(p, omega);
    const Complex a_disp_part = Complex(0, 1) * chi * p.a_disp * p.kappa;
    const Complex u(p.kappa / 2.0, p.delta);
    const Complex b_diss_part = (p.b_diss / 2.0) * (1.0 - chi * u);
    return a_disp_part + b_diss_part;
}

Complex self_energy(const SystemParams& p, double omega) {
    return detail::self_energy(p, Complex(omega, 0.0));
}

Complex n_denominator(const SystemParams& p, double omega) {
    return detail::n_denominator(p, Complex(omega, 0.0));
}

}  // namespace omx
