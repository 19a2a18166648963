#pragma once

#include "omx/params.hpp"

#include <Eigen/Core>

namespace omx {

// Nonzero second moments of the input noises, in the convention
// <n_i(w) n_j(w')> = 2 pi delta(w + w') C_ij on n = (eta, eta+, xi_in, xi_in+).
struct NoiseCorrelators {
    double eta_etadag;  // <eta eta+>   = n_th + 1
    double etadag_eta;  // <eta+ eta>   = n_th
    double xi_xidag;    // <xi_in xi_in+> = 1

    static NoiseCorrelators thermal(double n_th) { return {n_th + 1.0, n_th, 1.0}; }

    // C as a matrix in the index order above; all other moments vanish.
    Eigen::Matrix4cd moment_matrix() const;
};

struct OracleSpectra {
    double s_cc;
    double s_dd;
    double s_dd_out;
    double s_xx;  // displacement spectrum of x/x0 = c + c+, for cross-checks
};

// Spectra by direct matrix solve of the linearized dynamics: v(w) =
// (-i w I - A)^-1 B n(w), second moments contracted with the correlator
// table, and the output field assembled from the linearized input-output map
// xi_out = xi_in + sqrt(kappa) d + sqrt(kappa) (B abar / 2)(c + c+).
// Uses only the drift matrix and raw parameters; none of the closed forms.
// Throws std::runtime_error if the solve is singular at this frequency.
OracleSpectra oracle_spectra(const SystemParams& p, double omega);

struct ProbeAmplitudes {
    Complex a_minus;
    Complex a_plus;
};

// Deterministic response to a coherent input at delta_probe through the same
// linear system, normalized like the closed-form amplitudes.
ProbeAmplitudes oracle_probe_response(const SystemParams& p, double delta_probe);

}  // namespace omx
