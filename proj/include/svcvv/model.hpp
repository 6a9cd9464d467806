#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svcvv/ingest.hpp"
#include "svcvv/internal_model.hpp"
#include "svcvv/msi.hpp"
#include "svcvv/params.hpp"
#include "svcvv/quaternion.hpp"
#include "svcvv/timeseries.hpp"
#include "svcvv/vec3.hpp"
#include "svcvv/vestibular.hpp"

namespace svcvv {

/// `svc` runs on inertial input alone (requires K_vvc = 0); `svc_vv` also
/// consumes a visual-vertical series.
enum class Variant { svc, svc_vv };

Variant parse_variant(const std::string& name);
const char* variant_name(Variant v);

struct ModelConfig {
    ComplementaryFilterConfig filter;
    /// Start the central gravity expectation at the measured vertical
    /// (default) or at zero (models a fully naive prior).
    enum class GhatInit { measured, zero };
    GhatInit ghat_init = GhatInit::measured;
};

/// The four sensed-minus-expected discrepancies driving the model.
/// d_v = v_s - v_hat_s by construction of the step.
struct ConflictSignals {
    Vec3 d_omega;
    Vec3 d_a;
    Vec3 d_v;
    Vec3 d_vv;
};

struct ModelState {
    double t = 0.0;
    // physical sensing path
    SccState scc;
    Vec3 v_s;
    // observers feeding the expectation path
    Quaternion q;
    Vec3 g;
    // central expectations
    InternalSccState scc_hat;
    Vec3 v_hat_s;
    Vec3 g_hat;
    // incidence stage
    MsiState msi;
};

struct StepOutput {
    ConflictSignals conflicts;
    double hill = 0.0;
    double msi = 0.0;  // percent, for the step-start sample
    Vec3 g;            // observer gravity at the step start (reporting)
};

/// Calibrate the starting state from a stationary prefix: the observer and
/// the sensed/expected verticals all start at the mean GIA over the first
/// second (renormalized to standard gravity), the attitude starts at the
/// tilt-only rotation consistent with that vertical, and every filter state
/// starts at zero. Requires at least one second of data.
ModelState init_state(const ImuSeries& imu, const ParameterSet& p, const ModelConfig& cfg);

/// Advance the full model by one sample period. Sub-models run in a fixed
/// order; every emitted signal belongs to the step-start instant and every
/// state integrates to the next instant with step-start inputs held (ZOH).
/// The two expectation loops with direct feedthrough (rotation and
/// acceleration) are linear in their conflict, so they are solved exactly
/// instead of iterated. `vv_s` may be absent only while K_vvc = 0.
/// Any non-finite result aborts with the first offending sub-model named.
StepOutput model_step(ModelState& state, const Vec3& f, const Vec3& omega,
                      const std::optional<Vec3>& vv_s, const ParameterSet& p,
                      const ModelConfig& cfg, double dt);

struct TrialResult {
    std::vector<double> t;
    std::vector<double> msi;       // percent
    std::vector<double> norm_dv;   // |d_v|, m/s^2
    std::vector<double> norm_dvv;  // |d_vv|, m/s^2 (NaN when no visual input)
    std::vector<double> theta_vv;  // degrees (NaN when no visual input)
    std::vector<double> theta_g;   // degrees from observer gravity (NaN when degenerate)
    double mean_msi = 0.0;
    double max_msi = 0.0;
    std::uint64_t params_hash = 0;
    Variant variant = Variant::svc;
};

/// Simulate a whole trial. The IMU series must sit on a uniform grid; a
/// visual series must already be resampled onto that same grid (any
/// timestamp off by more than half a sample is rejected).
TrialResult run_trial(const ImuSeries& imu, const std::optional<TimeSeries<Vec3>>& vv,
                      const ParameterSet& p, Variant variant, const ModelConfig& cfg);

/// CSV with a `# params_hash=...` / `# variant=...` preamble, then one row
/// per sample: t,msi,norm_dv,norm_dvv,theta_vv,theta_g. Missing signals are
/// written as nan.
void save_trial(const std::string& path, const TrialResult& r);
TrialResult load_trial(const std::string& path);

}  // namespace svcvv
