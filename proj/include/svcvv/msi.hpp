#pragma once

#include "svcvv/vec3.hpp"

namespace svcvv {

/// Two cascaded first-order lags with time constant tau_i feeding the
/// incidence percentage: MSI = P * x2, where
///
///     dx1/dt = (h - x1)/tau_i,   dx2/dt = (x1 - x2)/tau_i
///
/// and h is the saturating conflict drive from `hill`.
struct MsiState {
    double x1 = 0.0;
    double x2 = 0.0;
};

/// Saturating nonlinearity mapping the vertical-conflict magnitude into
/// [0, 1): (|dv|/b) / (1 + |dv|/b). Equal to 0.5 exactly at |dv| = b.
double hill(const Vec3& d_v, double b);

/// Emits the incidence (percent) for the step start, then advances the two
/// lag states one RK4 step with the drive held constant.
double msi_step(MsiState& state, double hill_value, double p_max, double tau_i, double dt);

}  // namespace svcvv
