#pragma once

#include "omx/params.hpp"

namespace omx {

// Eigenvalues of the two-mode rotating-wave generator. Real part = mode
// energy, imaginary part = -linewidth/2. e_plus is the larger real part.
struct EigenPair {
    Complex e_plus;
    Complex e_minus;
};

// E+- = m +- sqrt((d/2)^2 + |g|^2) with the uncoupled modes
//   cavity: -delta - i kappa/2,  mechanical: omega_m - i gamma/2,
// m their mean, d their difference, and coupling matrix element
//   g = B Omega / 2 - A abar kappa,  Omega = abar (delta + i kappa / 2).
// The square root takes the branch with nonnegative real part (ties broken
// toward nonnegative imaginary part) so mode labels are sweep-stable.
EigenPair eigenvalues(const SystemParams& p);

struct CriticalCouplings {
    double dispersive;   // A*abar threshold at delta = -omega_m: (kappa-gamma)/(4 kappa)
    double dissipative;  // B*abar threshold: (kappa-gamma)/sqrt(4 omega_m^2 + kappa^2)
};

// Mode-splitting thresholds at delta = -omega_m. Throws std::domain_error
// when kappa <= gamma (no splitting regime).
CriticalCouplings critical_coupling(const SystemParams& p);

// Detuning of minimal splitting for purely dissipative coupling with damping
// neglected: -omega_m / (1 + (B abar)^2). Throws std::domain_error if
// a_disp != 0.
double min_split_detuning(const SystemParams& p);

namespace detail {
// Raw generator diagonalization; lets tests probe the kappa = gamma = 0 limit
// without a SystemParams (whose invariants require kappa > 0).
EigenPair eigenpair(double omega_m, double kappa, double gamma, double delta, double a_disp,
                    double b_diss, double abar);
}  // namespace detail

}  // namespace omx
