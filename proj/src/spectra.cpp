#include "omx/spectra.hpp"

#include "omx/noise.hpp"
#include "omx/response.hpp"
#include "omx/stability.hpp"

#include <cmath>
#include <stdexcept>

namespace omx {

namespace {

Complex chim_inv(const SystemParams& p, double omega) {
    return Complex(p.gamma / 2.0, -(omega - p.omega_m));
}

// Shared bracket of the cavity/output spectra.
double dd_bracket(const SystemParams& p, double omega) {
    const double a2 = std::norm(alpha(p, omega));
    return 4.0 * p.kappa * p.abar * p.abar * p.omega_m * p.omega_m * a2 +
           p.gamma * std::norm(chim_inv(p, -omega)) * (p.n_th + 1.0) +
           p.gamma * std::norm(chim_inv(p, omega)) * p.n_th;
}

}  // namespace

double s_cc(const SystemParams& p, double omega) {
    const Complex sig = self_energy(p, omega);
    const Complex inv_m = chim_inv(p, omega);
    const double sigma_th =
        std::norm(sig) * (p.n_th + 1.0) + std::norm(inv_m + Complex(0, 1) * sig) * p.n_th;
    const double sigma_opt =
        std::norm(inv_m) * p.abar * p.abar * std::norm(alpha(p, omega));
    return (p.gamma * sigma_th + p.kappa * sigma_opt) / std::norm(n_denominator(p, omega));
}

double s_dd(const SystemParams& p, double omega) {
    const double front =
        p.abar * p.abar * std::norm(alpha(p, -omega) - p.b_diss / 2.0);
    return front / std::norm(n_denominator(p, omega)) * dd_bracket(p, omega);
}

double s_dd_out(const SystemParams& p, double omega) {
    const double front = p.kappa * p.abar * p.abar * std::norm(alpha(p, -omega));
    return front / std::norm(n_denominator(p, omega)) * dd_bracket(p, omega);
}

double spectrum_value(const SystemParams& p, SpectrumKind kind, double omega) {
    switch (kind) {
        case SpectrumKind::mechanical: return s_cc(p, omega);
        case SpectrumKind::cavity: return s_dd(p, omega);
        case SpectrumKind::output: return s_dd_out(p, omega);
        case SpectrumKind::force: return force_spectrum(p, omega);
    }
    throw std::logic_error("spectrum_value: unknown kind");
}

SpectrumSeries sample_spectrum(const SystemParams& p, SpectrumKind kind,
                               const std::vector<double>& omegas) {
    SpectrumSeries s;
    s.kind = kind;
    s.params = p;
    s.omegas = omegas;
    s.values.reserve(omegas.size());
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        if (i > 0 && !(omegas[i] > omegas[i - 1]))
            throw std::invalid_argument("sample_spectrum: omegas must be strictly increasing");
        s.values.push_back(spectrum_value(p, kind, omegas[i]));
    }
    return s;
}

IntegralEstimate phonon_number(const SystemParams& p, const QuadratureSettings& quad) {
    if (!is_stable(p).stable)
        throw instability_error("phonon_number: unstable operating point");

    const double W = quad.window_factor * p.omega_m;
    std::vector<double> pts{-W, W};
    // Seed the resonances, then geometric shells around the (shifted) mechanical
    // lines so a gamma-narrow peak inside an omega_m-wide panel is not missed.
    const double dwm = freq_shift(p);
    const double gtot = std::max(std::abs(p.gamma + rates(p).gamma_opt), 1e-14 * p.kappa);
    for (double c : {-(p.omega_m + dwm), p.omega_m + dwm, -p.omega_m, p.omega_m, p.delta,
                     -p.delta}) {
        pts.push_back(c);
        for (double h = 0.5 * gtot; h < 4.0 * p.kappa; h *= 4.0) {
            pts.push_back(c - h);
            pts.push_back(c + h);
        }
    }
    if (p.delta != 0.0) {
        const double fano_peak =
            (p.kappa * p.kappa - 4.0 * p.delta * p.delta) / (4.0 * p.delta);
        pts.push_back(fano_peak);
    }
    std::vector<double> clipped;
    for (double x : pts)
        if (x >= -W && x <= W) clipped.push_back(x);

    IntegralEstimate est = adaptive_integrate([&p](double w) { return s_cc(p, w); }, clipped,
                                              quad.rel_tol, quad.abs_floor);
    est.value /= 2.0 * M_PI;
    est.error /= 2.0 * M_PI;
    return est;
}

}  // namespace omx
