#pragma once

#include "omx/params.hpp"
#include "omx/quadrature.hpp"

#include <stdexcept>

namespace omx {

// Thrown where a result is only defined at a stable operating point.
struct instability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Weak-coupling (quantum-noise) summary of one operating point.
struct WeakCouplingReport {
    double gamma_up = 0.0;        // amplification rate, s_ff(-omega_m)
    double gamma_down = 0.0;      // cooling rate, s_ff(+omega_m)
    double gamma_opt = 0.0;       // gamma_down - gamma_up
    double n_opt = 0.0;           // gamma_up/gamma_opt; +inf at gamma_opt == 0, NaN below
    double n_osc = 0.0;           // steady-state occupancy; NaN when gamma_tot <= 0
    double delta_omega_m = 0.0;   // optical spring shift Re[Sigma(omega_m)]
    double gamma_tot = 0.0;       // gamma + gamma_opt
};

// Backaction force spectrum in phonon-rate units (zero-point length absorbed):
// s_ff(w) = kappa * abar^2 * |alpha(w)|^2. Fano-shaped whenever b_diss != 0,
// with an exact zero at delta = delta_zero(w).
double force_spectrum(const SystemParams& p, double omega);

// Fills the rate fields (gamma_up/down/opt, n_opt, gamma_tot); the remaining
// fields stay NaN. Use weak_coupling_report for everything at once.
WeakCouplingReport rates(const SystemParams& p);

// Optical spring shift delta_omega_m = Re[Sigma(omega_m)].
double freq_shift(const SystemParams& p);

// Independent route: principal-value integral
//   delta_omega_m = (1/2pi) PV int dw s_ff(w) [1/(omega_m - w) - 1/(omega_m + w)]
// evaluated with symmetric-pair panels around the poles and a 1/w-mapped
// treatment of the tails beyond the finite window.
IntegralEstimate freq_shift_integral(const SystemParams& p, const QuadratureSettings& quad);

// n_osc = (gamma n_th + gamma_up) / gamma_tot  [gamma_opt*n_opt == gamma_up].
// Throws instability_error when gamma_tot <= 0.
double occupancy(const SystemParams& p);

struct SpecialDetunings {
    double delta_zero;  // detuning with s_ff(omega) = 0:  -omega/2 + kappa A/B
    double delta_opt;   // delta_zero(-omega_m) = omega_m/2 + kappa A/B
};

// Throws std::domain_error when b_diss == 0 (no Fano zero exists).
SpecialDetunings special_detunings(const SystemParams& p, double omega);

WeakCouplingReport weak_coupling_report(const SystemParams& p);

}  // namespace omx
