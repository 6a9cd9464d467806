#include "svcvv/internal_model.hpp"

#include <cmath>

namespace svcvv {

Vec3 internal_scc_step(InternalSccState& state, const Vec3& omega_hat, double tau_d, double dt) {
    const double u[3] = {omega_hat.x, omega_hat.y, omega_hat.z};
    double y[3];
    for (int i = 0; i < 3; ++i) {
        double& x = state.x[i];
        y[i] = u[i] - x;
        auto f = [&](double xs) { return (u[i] - xs) / tau_d; };
        const double k1 = f(x);
        const double k2 = f(x + 0.5 * dt * k1);
        const double k3 = f(x + 0.5 * dt * k2);
        const double k4 = f(x + dt * k3);
        x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return {y[0], y[1], y[2]};
}

Quaternion complementary_filter_step(const Quaternion& q, const Vec3& omega, const Vec3& f,
                                     const ComplementaryFilterConfig& cfg, double dt) {
    Quaternion q1 = normalized(q * quat_exp_half(omega * dt));
    if (norm(f) < cfg.free_fall_guard) return q1;

    const Vec3 up_meas = f / norm(f);
    const Vec3 up_pred = rotate(conjugate(q1), Vec3{0.0, 0.0, 1.0});
    const Vec3 axis = cross(up_pred, up_meas);
    const double s = norm(axis);
    const double c = dot(up_pred, up_meas);
    const double angle = std::atan2(s, c);
    if (s < 1e-12) {
        if (c > 0.0) return q1;  // already aligned
        // Antiparallel: correction axis is unconstrained; pick one orthogonal
        // to the predicted up so the partial rotation is still well defined.
        Vec3 any = cross(up_pred, Vec3{1.0, 0.0, 0.0});
        if (norm(any) < 1e-6) any = cross(up_pred, Vec3{0.0, 1.0, 0.0});
        const Quaternion r = from_axis_angle(any, -(1.0 - cfg.alpha) * angle);
        return normalized(q1 * r);
    }
    // Post-multiplying by r rotates the predicted up by the inverse of r, so
    // the sign is flipped to move it toward the measurement.
    const Quaternion r = from_axis_angle(axis / s, -(1.0 - cfg.alpha) * angle);
    return normalized(q1 * r);
}

Vec3 gravity_observer_step(const Vec3& g, const Quaternion& q0, const Quaternion& q1, double dt) {
    const Vec3 omega_q = quat_derivative_body_rate(q0, q1, dt);
    auto deriv = [&](const Vec3& gv) { return -cross(omega_q, gv); };
    const Vec3 k1 = deriv(g);
    const Vec3 k2 = deriv(g + 0.5 * dt * k1);
    const Vec3 k3 = deriv(g + 0.5 * dt * k2);
    const Vec3 k4 = deriv(g + dt * k3);
    const Vec3 gi = g + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    return normalize_to(gi, kGravity);
}

Vec3 g_hat_step(const Vec3& g_hat, const Vec3& d_vv, const Vec3& d_v,
                double k_vvc, double k_vc, double dt) {
    // RK4 of a state-independent right side collapses to the exact update.
    return g_hat + dt * (k_vvc * d_vv + k_vc * d_v);
}

}  // namespace svcvv
