#pragma once

#include "omx/params.hpp"

namespace omx {

// Linear response to a weak probe at detuning delta_probe = omega_p - omega_d.
// All amplitudes are normalized by the probe amplitude (anti-Stokes by
// d_probe, Stokes by conj(d_probe)), so probe power never enters.
struct OMITResponse {
    double delta_probe = 0.0;
    Complex a_minus;         // probe-frequency (anti-Stokes) amplitude
    Complex a_plus;          // mirror-frequency (Stokes) amplitude
    Complex a_minus_approx;  // resolved-sideband approximation of a_minus
};

// A- / d_probe = 1 - kappa chi_c(d) + 2 i kappa omega_m abar^2 alpha(d)^2 / N(d)
// (alpha squared, not |alpha|^2).
Complex anti_stokes(const SystemParams& p, double delta_probe);

// A+ / conj(d_probe) = -2 i kappa omega_m abar^2 conj(alpha(d)) alpha(-d) / N(-d)
Complex stokes(const SystemParams& p, double delta_probe);

// Anti-Stokes amplitude keeping only the self-energy parts with weight near
// +omega_m (valid in the resolved-sideband regime):
//   1 - kappa chi_c(d) - kappa abar^2 alpha(d)^2 / (chi_m^-1(d) + i Sigma~(d))
// The corresponding Stokes amplitude vanishes in this approximation.
Complex anti_stokes_approx(const SystemParams& p, double delta_probe);

// Re[e^{i theta} a]; theta = 0 gives the commonly plotted quadrature Re[A-].
double homodyne_quadrature(Complex a, double theta);

OMITResponse omit_response(const SystemParams& p, double delta_probe);

}  // namespace omx
