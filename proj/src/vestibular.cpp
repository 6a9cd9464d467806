#include "svcvv/vestibular.hpp"

namespace svcvv {

Vec3 scc_step(SccState& state, const Vec3& omega, const SccParams& p, double dt) {
    const double a0 = 1.0 / (p.tau_a * p.tau_d);
    const double a1 = 1.0 / p.tau_a + 1.0 / p.tau_d;
    const double u[3] = {omega.x, omega.y, omega.z};
    double y[3];
    for (int i = 0; i < 3; ++i) {
        double& x1 = state.x1[i];
        double& x2 = state.x2[i];
        // Output at the step start: y = u - a0 x1 - a1 x2 (unit feedthrough).
        y[i] = u[i] - a0 * x1 - a1 * x2;

        auto f1 = [](double, double b) { return b; };
        auto f2 = [&](double a, double b) { return -a0 * a - a1 * b + u[i]; };
        const double k1a = f1(x1, x2), k1b = f2(x1, x2);
        const double k2a = f1(x1 + 0.5 * dt * k1a, x2 + 0.5 * dt * k1b),
                     k2b = f2(x1 + 0.5 * dt * k1a, x2 + 0.5 * dt * k1b);
        const double k3a = f1(x1 + 0.5 * dt * k2a, x2 + 0.5 * dt * k2b),
                     k3b = f2(x1 + 0.5 * dt * k2a, x2 + 0.5 * dt * k2b);
        const double k4a = f1(x1 + dt * k3a, x2 + dt * k3b),
                     k4b = f2(x1 + dt * k3a, x2 + dt * k3b);
        x1 += dt / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
        x2 += dt / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
    }
    return {y[0], y[1], y[2]};
}

Vec3 lp_step(const Vec3& v_s, const Vec3& f_s, const Vec3& omega_s, double tau, double dt) {
    auto deriv = [&](const Vec3& v) { return (f_s - v) / tau - cross(omega_s, v); };
    const Vec3 k1 = deriv(v_s);
    const Vec3 k2 = deriv(v_s + 0.5 * dt * k1);
    const Vec3 k3 = deriv(v_s + 0.5 * dt * k2);
    const Vec3 k4 = deriv(v_s + dt * k3);
    return v_s + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace svcvv
