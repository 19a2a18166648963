#include "omx/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace omx {

namespace {
void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument("SystemParams: " + what);
}
}  // namespace

void SystemParams::validate() const {
    require(std::isfinite(omega_m) && omega_m > 0.0, "omega_m must be > 0");
    require(std::isfinite(kappa) && kappa > 0.0, "kappa must be > 0");
    require(std::isfinite(gamma) && gamma >= 0.0, "gamma must be >= 0");
    require(std::isfinite(delta), "delta must be finite");
    require(std::isfinite(a_disp) && std::isfinite(b_diss), "couplings must be finite");
    require(std::isfinite(abar) && abar >= 0.0, "abar must be >= 0");
    require(std::isfinite(n_th) && n_th >= 0.0, "n_th must be >= 0");
}

SystemParams SystemParams::with_delta(double d) const {
    SystemParams q = *this;
    q.delta = d;
    q.validate();
    return q;
}

SystemParams SystemParams::with_abar(double a) const {
    SystemParams q = *this;
    q.abar = a;
    q.validate();
    return q;
}

SystemParams SystemParams::with_coupling(CouplingType which, double product) const {
    if (abar <= 0.0)
        throw std::invalid_argument("with_coupling: abar must be > 0 to fix coupling*abar");
    SystemParams q = *this;
    (which == CouplingType::dispersive ? q.a_disp : q.b_diss) = product / abar;
    q.validate();
    return q;
}

}  // namespace omx
