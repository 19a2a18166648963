#pragma once

#include "omx/params.hpp"

namespace omx {

// Shared linear-response kernels of the coupled system. Fourier convention:
// time dependence e^{-i w t}, and Q^dag(w) = [Q(-w)]^dag for all operators.

// chi_c(w) = [kappa/2 - i(w + delta)]^-1
Complex cavity_response(const SystemParams& p, double omega);

// chi_m(w) = [gamma/2 - i(w - omega_m)]^-1.
// Throws std::domain_error at the undamped pole (gamma = 0, w = omega_m).
Complex mech_response(const SystemParams& p, double omega);

// Fano numerator of the backaction force:
//   alpha(w) = i chi_c(w) A kappa  +  B/2 - (B/2) chi_c(w) (i delta + kappa/2)
// The constant B/2 is the direct bath-oscillator path; the chi_c terms are the
// cavity-filtered path. Their interference produces the Fano zero.
Complex alpha(const SystemParams& p, double omega);

// Optomechanical self-energy Sigma = Sigma_A + Sigma_B + Sigma_AB with
//   Sigma_A  = -i (A kappa abar)^2 [chi_c(w) - chi_c*(-w)]
//   Sigma_B  =  i (B/2)^2 abar^2 [chi_c(w)(i delta + kappa/2)^2
//                                 - chi_c*(-w)(i delta - kappa/2)^2]
//   Sigma_AB =  B A kappa abar^2 [chi_c(w)(i delta + kappa/2)
//                                 - chi_c*(-w)(i delta - kappa/2)]
Complex self_energy(const SystemParams& p, double omega);

// N(w) = chi_m^-1(w) chi_m^{*-1}(-w) + 2 omega_m Sigma(w); its complex zeros
// are the poles of the coupled response (upper half plane <=> instability).
Complex n_denominator(const SystemParams& p, double omega);

namespace detail {

// Analytic continuations to complex frequency. On the real axis
// cavity_response_conj_neg(w) equals conj(cavity_response(-w)).
Complex cavity_response(const SystemParams& p, Complex omega);
Complex cavity_response_conj_neg(const SystemParams& p, Complex omega);
Complex self_energy(const SystemParams& p, Complex omega);
Complex n_denominator(const SystemParams& p, Complex omega);

}  // namespace detail

}  // namespace omx
