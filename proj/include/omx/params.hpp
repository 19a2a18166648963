#pragma once

#include <complex>

namespace omx {

using Complex = std::complex<double>;

enum class CouplingType { dispersive, dissipative };

// One operating point of the driven cavity-oscillator system. All rates share
// one unit (kappa = 1 is the conventional choice); the global drive phase is
// gauged away, so abar is real and nonnegative and every observable below is
// phase-independent. The drive amplitude is never stored: it follows from the
// uncoupled steady state as Omega = abar*(delta + i*kappa/2).
struct SystemParams {
    double omega_m = 1.0;  // mechanical resonance frequency
    double kappa = 1.0;    // cavity linewidth
    double gamma = 0.0;    // intrinsic mechanical damping
    double delta = 0.0;    // drive detuning omega_d - omega_c
    double a_disp = 0.0;   // dimensionless dispersive coupling (cavity frequency pull)
    double b_diss = 0.0;   // dimensionless dissipative coupling (cavity linewidth pull)
    double abar = 1.0;     // steady-state intracavity amplitude, real >= 0
    double n_th = 0.0;     // thermal phonon occupancy of the mechanical bath

    // Throws std::invalid_argument on kappa <= 0, omega_m <= 0, gamma < 0,
    // n_th < 0 or abar < 0.
    void validate() const;

    Complex drive() const { return abar * Complex(delta, kappa / 2.0); }

    // Copy-with-change helpers for sweeps; each validates the result.
    SystemParams with_delta(double d) const;
    SystemParams with_abar(double a) const;
    // Sets the raw coupling so that coupling*abar equals `product` at the
    // current abar (the product is what the observables depend on).
    SystemParams with_coupling(CouplingType which, double product) const;
};

}  // namespace omx
