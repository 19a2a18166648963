#include "omx/omit.hpp"

#include "omx/response.hpp"

#include <cmath>

namespace omx {

Complex anti_stokes(const SystemParams& p, double delta_probe) {
    const Complex a = alpha(p, delta_probe);
    return 1.0 - p.kappa * cavity_response(p, delta_probe) +
           Complex(0, 2.0) * p.kappa * p.omega_m * p.abar * p.abar * a * a /
               n_denominator(p, delta_probe);
}

Complex stokes(const SystemParams& p, double delta_probe) {
    return Complex(0, -2.0) * p.kappa * p.omega_m * p.abar * p.abar *
           std::conj(alpha(p, delta_probe)) * alpha(p, -delta_probe) /
           n_denominator(p, -delta_probe);
}

Complex anti_stokes_approx(const SystemParams& p, double delta_probe) {
    const Complex chi = cavity_response(p, delta_probe);
    const Complex u(p.kappa / 2.0, p.delta);  // i delta + kappa/2
    const double ak = p.a_disp * p.kappa * p.abar;
    const double bh = (p.b_diss / 2.0) * p.abar;
    // truncated self-energy: only the chi_c(w) halves survive
    const Complex sigma_trunc = Complex(0, -1) * (ak * ak) * chi +
                                Complex(0, 1) * (bh * bh) * chi * u * u +
                                p.b_diss * p.a_disp * p.kappa * p.abar * p.abar * chi * u;
    const Complex inv_m(p.gamma / 2.0, -(delta_probe - p.omega_m));
    const Complex a = alpha(p, delta_probe);
    return 1.0 - p.kappa * chi -
           p.kappa * p.abar * p.abar * a * a / (inv_m + Complex(0, 1) * sigma_trunc);
}

double homodyne_quadrature(Complex a, double theta) {
    return std::real(std::polar(1.0, theta) * a);
}

OMITResponse omit_response(const SystemParams& p, double delta_probe) {
    return {delta_probe, anti_stokes(p, delta_probe), stokes(p, delta_probe),
            anti_stokes_approx(p, delta_probe)};
}

}  // namespace omx
