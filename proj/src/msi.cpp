#include "svcvv/msi.hpp"

#include <stdexcept>

namespace svcvv {

double hill(const Vec3& d_v, double b) {
    if (b <= 0.0) throw std::domain_error("hill: half-saturation must be positive");
    const double r = norm(d_v) / b;
    return r / (1.0 + r);
}

double msi_step(MsiState& state, double hill_value, double p_max, double tau_i, double dt) {
    const double msi = p_max * state.x2;
    const double u = hill_value;
    auto f1 = [&](double x1) { return (u - x1) / tau_i; };
    auto f2 = [&](double x1, double x2) { return (x1 - x2) / tau_i; };
    const double& x1 = state.x1;
    const double& x2 = state.x2;
    const double k1a = f1(x1), k1b = f2(x1, x2);
    const double k2a = f1(x1 + 0.5 * dt * k1a), k2b = f2(x1 + 0.5 * dt * k1a, x2 + 0.5 * dt * k1b);
    const double k3a = f1(x1 + 0.5 * dt * k2a), k3b = f2(x1 + 0.5 * dt * k2a, x2 + 0.5 * dt * k2b);
    const double k4a = f1(x1 + dt * k3a), k4b = f2(x1 + dt * k3a, x2 + dt * k3b);
    state.x1 += dt / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
    state.x2 += dt / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
    return msi;
}

}  // namespace svcvv
