#include "omx/noise.hpp"

#include "omx/response.hpp"

#include <cmath>
#include <limits>

namespace omx {

double force_spectrum(const SystemParams& p, double omega) {
    const Complex a = alpha(p, omega);
    return p.kappa * p.abar * p.abar * std::norm(a);
}

WeakCouplingReport rates(const SystemParams& p) {
    WeakCouplingReport r;
    r.gamma_up = force_spectrum(p, -p.omega_m);
    r.gamma_down = force_spectrum(p, p.omega_m);
    r.gamma_opt = r.gamma_down - r.gamma_up;
    if (r.gamma_opt > 0.0)
        r.n_opt = r.gamma_up / r.gamma_opt;
    else if (r.gamma_opt == 0.0)
        r.n_opt = std::numeric_limits<double>::infinity();
    else
        r.n_opt = std::numeric_limits<double>::quiet_NaN();
    r.gamma_tot = p.gamma + r.gamma_opt;
    r.n_osc = std::numeric_limits<double>::quiet_NaN();
    r.delta_omega_m = std::numeric_limits<double>::quiet_NaN();
    return r;
}

double freq_shift(const SystemParams& p) { return std::real(self_energy(p, p.omega_m)); }

IntegralEstimate freq_shift_integral(const SystemParams& p, const QuadratureSettings& quad) {
    const double om = p.omega_m;
    const auto kern = [&p, om](double w) {
        return force_spectrum(p, w) * (1.0 / (om - w) - 1.0 / (om + w));
    };

    const auto evaluate = [&](double window) {
        const double W = window * om;
        const double r = 0.5 * om;  // half-width of the pole-pair regions
        // Apportion the node budget: most panels go to the three smooth
        // stretches, a fixed share to pole pairs and tails.
        const int smooth_panels = std::max(8, quad.nodes / (4 * 40));
        double total = 0.0;
        total += gauss_panels(kern, -W, -om - r, smooth_panels);
        total += gauss_panels(kern, -om + r, om - r, smooth_panels);
        total += gauss_panels(kern, om + r, W, smooth_panels * 2);
        // Symmetric pairs around each pole: the substitution w = pole +- t
        // cancels the simple pole, leaving a regular integrand in t; panels
        // shrink geometrically toward t = 0.
        const auto pair_about = [&](double pole) {
            const auto g = [&](double t) { return kern(pole + t) + kern(pole - t); };
            double s = 0.0, hi = r;
            while (hi > 1e-13 * r) {
                const double lo = hi * 0.5;
                s += gauss_panels(g, lo, hi, 2);
                hi = lo;
            }
            return s;
        };
        total += pair_about(om) + pair_about(-om);
        // Tails |w| > W via w = W/t: the odd constant part of s_ff cancels
        // between the two sides, leaving a bounded integrand on (0, 1].
        const auto tails = [&](double t) { return (kern(W / t) + kern(-W / t)) * W / (t * t); };
        total += gauss_panels(tails, 1e-12, 1.0, smooth_panels);
        return total / (2.0 * M_PI);
    };

    IntegralEstimate out;
    const double v1 = evaluate(quad.window_factor);
    const double v2 = evaluate(2.0 * quad.window_factor);
    out.value = v2;
    out.error = std::abs(v2 - v1);
    out.converged = out.error <= std::max(quad.rel_tol * std::abs(v2), quad.abs_floor);
    return out;
}

double occupancy(const SystemParams& p) {
    const WeakCouplingReport r = rates(p);
    const double gamma_tot = p.gamma + r.gamma_opt;
    if (gamma_tot <= 0.0)
        throw instability_error("occupancy: gamma_tot <= 0 (unstable operating point)");
    return (p.gamma * p.n_th + r.gamma_up) / gamma_tot;
}

SpecialDetunings special_detunings(const SystemParams& p, double omega) {
    if (p.b_diss == 0.0)
        throw std::domain_error("special_detunings: undefined for b_diss = 0");
    const double offset = p.kappa * p.a_disp / p.b_diss;
    return {-omega / 2.0 + offset, p.omega_m / 2.0 + offset};
}

WeakCouplingReport weak_coupling_report(const SystemParams& p) {
    WeakCouplingReport r = rates(p);
    r.delta_omega_m = freq_shift(p);
    if (r.gamma_tot > 0.0)
        r.n_osc = (p.gamma * p.n_th + r.gamma_up) / r.gamma_tot;
    return r;
}

}  // namespace omx
