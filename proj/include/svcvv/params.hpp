#pragma once

#include <cstdint>
#include <string>

namespace svcvv {

/// Gains and time constants of the conflict model. Field names are also the
/// keys of the on-disk parameter file.
struct ParameterSet {
    double K_a = 0.1;        // efference weight, acceleration
    double K_omega = 0.1;    // efference weight, rotation
    double K_omega_c = 10.0; // rotation-conflict gain
    double K_ac = 0.5;       // acceleration-conflict gain
    double K_vc = 5.0;       // vertical-conflict gain into the gravity estimate
    double K_vvc = 0.0;      // visual-vertical-conflict gain into the gravity estimate
    double tau = 2.0;        // s, sensed-vertical lag
    double tau_a = 190.0;    // s, canal adaptation
    double tau_d = 7.0;      // s, canal dominant constant
    double tau_I = 720.0;    // s, incidence lag (applied twice)
    double b = 0.5;          // m/s^2, conflict half-saturation
    double P = 85.0;         // %, incidence ceiling

    /// Preset without the visual channel (K_vc = 5, K_vvc = 0).
    static ParameterSet svc();
    /// Preset with the visual channel active (K_vc = 2.5, K_vvc = 2.5).
    static ParameterSet svc_vv();

    /// Throws InputError when a value is structurally unusable (non-positive
    /// time constants, saturation, ceiling out of range, or conflict gains
    /// that make the predictor loops singular).
    void validate() const;

    /// Order-independent content hash; stamped into result files so outputs
    /// can be traced back to the exact numbers that produced them.
    std::uint64_t hash() const;
};

/// Plain key=value parameter file ('#' starts a comment). Every field must
/// appear exactly once; unknown keys are rejected with their line number.
ParameterSet load_params(const std::string& path);
void save_params(const std::string& path, const ParameterSet& p);

}  // namespace svcvv
