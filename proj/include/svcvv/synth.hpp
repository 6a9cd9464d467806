#pragma once

#include <cstdint>
#include <vector>

#include "svcvv/image.hpp"
#include "svcvv/ingest.hpp"
#include "svcvv/vec3.hpp"

namespace svcvv {

/// Slalom course: half-circle arcs of the stated diameter around a line of
/// rotation centers, direction alternating so left and right turns balance,
/// with trapezoidal yaw-rate blends between arcs. Arc speed is reduced below
/// max_speed when the centripetal demand would exceed max_accel; the clamp is
/// reported on the output. The head is rigidly mounted: x toward the rider's
/// right, y up at rest, z rearward along the optical axis. Body roll follows
/// lateral acceleration through roll_gain.
struct SlalomSpec {
    double rotation_diameter = 2.5;  // m
    int n_centers = 4;               // 0 selects a straight constant-speed run
    double max_speed = 6.0 / 3.6;    // m/s
    double max_accel = 1.7;          // m/s^2
    double duration = 1200.0;        // s of driving
    double dt = 0.01;                // s
    double blend_time = 0.5;         // s of yaw-rate blending between arcs
    double roll_gain = 0.2;          // rad of body roll per g of lateral accel
    double rest_time = 0.0;          // s appended at standstill after driving
    double accel_noise_sigma = 0.0;  // m/s^2, per axis, measurement noise
    double gyro_noise_sigma = 0.0;   // rad/s, per axis, measurement noise
    std::uint64_t seed = 0;
};

struct SlalomTruth {
    ImuSeries imu;                       // measurements (noise included)
    std::vector<Vec3> a_body;            // true inertial acceleration, head frame
    std::vector<Vec3> g_body;            // true gravity, head frame
    std::vector<double> theta_true_deg;  // frontal-plane vertical angle, 90 + roll
    bool speed_clamped = false;
    double arc_speed = 0.0;  // m/s actually driven on arcs
};

/// Build the full trial. Noise-free outputs satisfy imu.f = a_body + g_body
/// with |g_body| = 9.81 at every sample; measurement noise (when enabled)
/// perturbs only the emitted imu samples, never the truth tracks.
SlalomTruth gen_slalom(const SlalomSpec& spec);

/// Striped test scene: a single-orientation sinusoidal grating whose
/// orientation tracks the rendered world vertical, which rolls per frame.
/// Every gradient in the frame is perpendicular to the stripes, so the
/// estimator's ground truth is exactly vertical_angle_deg + roll(t).
struct SceneSpec {
    int width = 1000;
    int height = 480;
    double fps = 30.0;
    double duration = 60.0;
    double stripe_period_px = 24.0;
    double vertical_angle_deg = 90.0;  // in-image vertical at zero roll
    double roll_constant_deg = 0.0;
    double roll_amplitude_deg = 0.0;  // sinusoidal roll on top of the constant
    double roll_freq_hz = 0.2;
};

int scene_frame_count(const SceneSpec& spec);
double scene_frame_time(const SceneSpec& spec, int k);
double scene_roll_deg(const SceneSpec& spec, int k);
double scene_theta_true_deg(const SceneSpec& spec, int k);

/// Render frame k. Frames are pure functions of (spec, k), so sequences can
/// be streamed without holding them in memory. Total roll must stay within
/// +-55 degrees of upright to keep the vertical inside the estimator's
/// search window.
ColorImage render_scene_frame(const SceneSpec& spec, int k);

}  // namespace svcvv
