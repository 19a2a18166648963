#pragma once

#include "omx/params.hpp"
#include "omx/quadrature.hpp"

#include <vector>

namespace omx {

enum class SpectrumKind { mechanical, cavity, output, force };

// A sampled spectrum with the parameters it was computed from.
struct SpectrumSeries {
    std::vector<double> omegas;  // strictly increasing
    std::vector<double> values;  // nonnegative spectral densities
    SpectrumKind kind = SpectrumKind::mechanical;
    SystemParams params;
};

// Mechanical spectrum S_cc(w) = [gamma sigma_th + kappa sigma_opt] / |N(w)|^2,
//   sigma_th  = |Sigma|^2 (n_th + 1) + |chi_m^-1(w) + i Sigma|^2 n_th
//   sigma_opt = |chi_m^-1(w)|^2 abar^2 |alpha(w)|^2.
// Zero coupling reduces to the thermal Lorentzian peaked at -omega_m.
double s_cc(const SystemParams& p, double omega);

// Cavity spectrum: |abar|^2 |alpha(-w) - B/2|^2 / |N(w)|^2 times the bracket
//   4 kappa abar^2 omega_m^2 |alpha(w)|^2
//   + gamma |chi_m^-1(-w)|^2 (n_th + 1) + gamma |chi_m^-1(w)|^2 n_th.
double s_dd(const SystemParams& p, double omega);

// Output spectrum kappa |alpha(-w)|^2 / |alpha(-w) - B/2|^2 * S_dd(w),
// evaluated in product form so the removable singularity at
// alpha(-w) = B/2 never appears. Exactly zero along delta = delta_zero(-w).
double s_dd_out(const SystemParams& p, double omega);

double spectrum_value(const SystemParams& p, SpectrumKind kind, double omega);

SpectrumSeries sample_spectrum(const SystemParams& p, SpectrumKind kind,
                               const std::vector<double>& omegas);

// <n> = int dw S_cc(w) / 2pi by adaptive quadrature, refined around the
// resonances +-omega_m, +-delta and the Fano extremum (kappa^2-4 delta^2)/(4 delta).
// Throws instability_error at an unstable operating point.
IntegralEstimate phonon_number(const SystemParams& p, const QuadratureSettings& quad);

}  // namespace omx
