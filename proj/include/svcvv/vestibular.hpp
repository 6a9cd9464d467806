#pragma once

#include <array>

#include "svcvv/vec3.hpp"

namespace svcvv {

/// Semicircular-canal dynamics: the band-pass
///
///     H(s) = tau_a * tau_d * s^2 / ((tau_a s + 1)(tau_d s + 1))
///
/// applied per axis, realized in controllable canonical form with two states
/// per axis. tau_a is the slow adaptation constant, tau_d the canal dominant
/// constant. Unit feedthrough: a rate step passes through instantly, then
/// washes out.
struct SccParams {
    double tau_a = 190.0;  // s
    double tau_d = 7.0;    // s
};

struct SccState {
    std::array<double, 3> x1{};  // per-axis canonical states
    std::array<double, 3> x2{};
};

/// Emits the sensed angular velocity for the sample at the step start, then
/// advances the state one step of RK4 with the input held constant (ZOH).
Vec3 scc_step(SccState& state, const Vec3& omega, const SccParams& p, double dt);

/// Otolith transfer is unity in the band of interest: sensed GIA equals GIA.
inline Vec3 oto_sense(const Vec3& f) { return f; }

/// Sensed vertical dynamics:
///
///     dv_s/dt = (f_s - v_s)/tau - omega_s x v_s
///
/// a first-order lag toward the sensed GIA, transported by the sensed head
/// rotation. One RK4 step, inputs held constant.
Vec3 lp_step(const Vec3& v_s, const Vec3& f_s, const Vec3& omega_s, double tau, double dt);

/// Sensed inertial acceleration is what the otolith reports beyond the
/// sensed vertical.
inline Vec3 sensed_acceleration(const Vec3& f_s, const Vec3& v_s) { return f_s - v_s; }

}  // namespace svcvv
