#include "omx/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace omx {

namespace {

constexpr int kGaussOrder = 40;

struct GaussRule {
    std::array<double, kGaussOrder> x{};  // nodes on [-1, 1]
    std::array<double, kGaussOrder> w{};
};

// Legendre nodes/weights by Newton iteration on P_n; symmetric, so only half
// the roots are solved for.
GaussRule make_gauss_rule() {
    GaussRule r;
    const int n = kGaussOrder;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const GaussRule& gauss_rule() {
    static const GaussRule rule = make_gauss_rule();
    return rule;
}

struct SimpsonPanel {
    double a, b;
    double fa, fm, fb;
    double s;
    int depth;
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace

double gauss_panels(const RealFn& f, double a, double b, int panels) {
    const GaussRule& g = gauss_rule();
    if (panels < 1) panels = 1;
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double lo = a + k * h;
        double s = 0.0;
        for (int i = 0; i < kGaussOrder; ++i)
            s += g.w[i] * f(lo + 0.5 * h * (g.x[i] + 1.0));
        total += 0.5 * h * s;
    }
    return total;
}

IntegralEstimate adaptive_integrate(const RealFn& f, const std::vector<double>& breakpoints,
                                    double rel_tol, double abs_floor, int max_depth) {
    IntegralEstimate out;
    if (breakpoints.size() < 2) return out;

    std::vector<double> pts = breakpoints;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // First pass to set the tolerance scale.
    double rough = 0.0;
    std::vector<SimpsonPanel> stack;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double a = pts[i], b = pts[i + 1];
        if (!(b > a)) continue;
        const double m = 0.5 * (a + b);
        SimpsonPanel panel{a, b, f(a), f(m), f(b), 0.0, 0};
        panel.s = simpson(a, b, panel.fa, panel.fm, panel.fb);
        rough += std::abs(panel.s);
        stack.push_back(panel);
    }
    const double scale = std::max(rough, abs_floor);

    double value = 0.0, err = 0.0;
    bool converged = true;
    while (!stack.empty()) {
        SimpsonPanel p = stack.back();
        stack.pop_back();
        const double m = 0.5 * (p.a + p.b);
        const double lm = 0.5 * (p.a + m), rm = 0.5 * (m + p.b);
        const double flm = f(lm), frm = f(rm);
        const double sl = simpson(p.a, m, p.fa, flm, p.fm);
        const double sr = simpson(m, p.b, p.fm, frm, p.fb);
        const double e = (sl + sr - p.s) / 15.0;
        const double local_tol =
            std::max(rel_tol * scale * (p.b - p.a) / (pts.back() - pts.front()), abs_floor);
        if (std::abs(e) <= local_tol || p.depth >= max_depth) {
            value += sl + sr + e;  // Richardson-corrected
            err += std::abs(e);
            if (p.depth >= max_depth && std::abs(e) > local_tol) converged = false;
        } else {
            stack.push_back({p.a, m, p.fa, flm, p.fm, sl, p.depth + 1});
            stack.push_back({m, p.b, p.fm, frm, p.fb, sr, p.depth + 1});
        }
    }
    out.value = value;
    out.error = err;
    out.converged = converged;
    return out;
}

}  // namespace omx
