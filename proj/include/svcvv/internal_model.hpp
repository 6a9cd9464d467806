#pragma once

#include <array>

#include "svcvv/quaternion.hpp"
#include "svcvv/vec3.hpp"
#include "svcvv/vestibular.hpp"

namespace svcvv {

/// Central replica of the canal dynamics: the first-order washout
///
///     H(s) = tau_d * s / (tau_d s + 1)
///
/// per axis, one state per axis (the low-pass memory x; output u - x).
struct InternalSccState {
    std::array<double, 3> x{};
};

/// Emits the replica's sensed rotation for the step start, then advances one
/// RK4 step with the input held constant.
Vec3 internal_scc_step(InternalSccState& state, const Vec3& omega_hat, double tau_d, double dt);

/// Rotation the brain expects to sense: weighted efference copy plus
/// conflict-driven correction.
inline Vec3 predicted_omega(const Vec3& omega, const Vec3& d_omega, double k_omega, double k_omega_c) {
    return k_omega * omega + k_omega_c * d_omega;
}

/// Acceleration the brain expects to sense, same structure as predicted_omega.
inline Vec3 predicted_acceleration(const Vec3& a, const Vec3& d_a, double k_a, double k_ac) {
    return k_a * a + k_ac * d_a;
}

/// Expected GIA recombines the gravity estimate with the expected acceleration.
inline Vec3 predicted_gia(const Vec3& g_hat, const Vec3& a_hat) { return g_hat + a_hat; }

/// The visual vertical the brain expects, given its gravity estimate: the
/// frontal-plane (x-y) projection; the optical axis component carries no
/// visual vertical information.
inline Vec3 sensed_vv_hat(const Vec3& g_hat) { return {g_hat.x, g_hat.y, 0.0}; }

struct ComplementaryFilterConfig {
    double alpha = 0.98;           // per-step gyro weight at 100 Hz
    double free_fall_guard = 0.5;  // m/s^2; skip tilt correction below this |f|
};

/// One attitude update: propagate by the gyro sample, then rotate the
/// estimate a (1 - alpha) fraction of the arc between the predicted up
/// direction and the measured GIA direction. Near free fall the GIA carries
/// no usable vertical, so only the gyro acts.
Quaternion complementary_filter_step(const Quaternion& q, const Vec3& omega, const Vec3& f,
                                     const ComplementaryFilterConfig& cfg, double dt);

/// Transport the gravity estimate through the head rotation implied by two
/// consecutive attitude samples:
///
///     dg/dt = -omega_q x g
///
/// one RK4 step, then renormalized to standard gravity. The norm is held
/// exactly; only the direction integrates.
Vec3 gravity_observer_step(const Vec3& g, const Quaternion& q0, const Quaternion& q1, double dt);

/// The replica of the sensed-vertical dynamics is the same filter as the
/// physical one; reuse keeps the two paths bit-identical on equal inputs.
inline Vec3 internal_lp_step(const Vec3& v_hat_s, const Vec3& f_hat_s, const Vec3& omega_hat_s,
                             double tau, double dt) {
    return lp_step(v_hat_s, f_hat_s, omega_hat_s, tau, dt);
}

/// Gravity-estimate correction driven by the visual-vertical and vertical
/// conflicts:
///
///     d g_hat/dt = k_vvc * d_vv + k_vc * d_v
///
/// one RK4 step; the right side is constant across the step, so the update
/// is exact.
Vec3 g_hat_step(const Vec3& g_hat, const Vec3& d_vv, const Vec3& d_v,
                double k_vvc, double k_vc, double dt);

constexpr double kGravity = 9.81;  // m/s^2

}  // namespace svcvv
