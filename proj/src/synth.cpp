#include "svcvv/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <vector>

#include "svcvv/errors.hpp"
#include "svcvv/internal_model.hpp"

namespace svcvv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegPerRad = 180.0 / kPi;

// Piecewise-linear profile node on the sample grid. Keeping every breakpoint
// on the grid makes trapezoidal integration of the heading exact and makes a
// regeneration at a finer dt reproduce the same trajectory.
struct Node {
    long k = 0;
    double yaw_rate = 0.0;
    double speed = 0.0;
};

class ProfileBuilder {
  public:
    explicit ProfileBuilder(double start_speed = 0.0) { nodes_.push_back({0, 0.0, start_speed}); }

    void add(long n_samples, double yaw_rate_end, double speed_end) {
        if (n_samples <= 0) return;
        const Node& last = nodes_.back();
        nodes_.push_back({last.k + n_samples, yaw_rate_end, speed_end});
    }

    void pop(std::size_t count) {
        while (count-- > 0 && nodes_.size() > 1) nodes_.pop_back();
    }

    long length() const { return nodes_.back().k; }

    // Sample the profile at integer grid points 0..n inclusive.
    void sample(long n, std::vector<double>& yaw_rate, std::vector<double>& speed) const {
        yaw_rate.assign(static_cast<std::size_t>(n) + 1, nodes_.back().yaw_rate);
        speed.assign(static_cast<std::size_t>(n) + 1, nodes_.back().speed);
        std::size_t seg = 0;
        for (long k = 0; k <= std::min(n, nodes_.back().k); ++k) {
            while (seg + 1 < nodes_.size() && nodes_[seg + 1].k < k) ++seg;
            const Node& a = nodes_[seg];
            const Node& b = nodes_[std::min(seg + 1, nodes_.size() - 1)];
            if (b.k == a.k) {
                yaw_rate[k] = b.yaw_rate;
                speed[k] = b.speed;
            } else {
                const double u = static_cast<double>(k - a.k) / static_cast<double>(b.k - a.k);
                yaw_rate[k] = a.yaw_rate + (b.yaw_rate - a.yaw_rate) * u;
                speed[k] = a.speed + (b.speed - a.speed) * u;
            }
        }
    }

  private:
    std::vector<Node> nodes_;
};

void validate_slalom(const SlalomSpec& s) {
    if (!(s.dt > 0.0)) throw InputError("slalom spec: dt must be positive");
    if (!(s.duration > 0.0)) throw InputError("slalom spec: duration must be positive");
    if (!(s.rotation_diameter > 0.0)) throw InputError("slalom spec: rotation_diameter must be positive");
    if (!(s.max_speed > 0.0)) throw InputError("slalom spec: max_speed must be positive");
    if (!(s.max_accel > 0.0)) throw InputError("slalom spec: max_accel must be positive");
    if (s.n_centers < 0) throw InputError("slalom spec: n_centers must be non-negative");
    if (s.blend_time < 0.0) throw InputError("slalom spec: blend_time must be non-negative");
    if (s.rest_time < 0.0) throw InputError("slalom spec: rest_time must be non-negative");
    if (s.roll_gain < 0.0) throw InputError("slalom spec: roll_gain must be non-negative");
    if (s.accel_noise_sigma < 0.0 || s.gyro_noise_sigma < 0.0)
        throw InputError("slalom spec: noise sigmas must be non-negative");
}

}  // namespace

SlalomTruth gen_slalom(const SlalomSpec& spec) {
    validate_slalom(spec);

    const double dt = spec.dt;
    const long n_drive = std::lround(spec.duration / dt);
    const long n_rest = std::lround(spec.rest_time / dt);
    const long n_total = n_drive + n_rest;

    SlalomTruth out;
    const double radius = spec.rotation_diameter / 2.0;
    const double curve_limit = std::sqrt(spec.max_accel * radius);
    out.arc_speed = std::min(spec.max_speed, curve_limit);
    out.speed_clamped = curve_limit < spec.max_speed;

    ProfileBuilder profile(spec.n_centers == 0 ? spec.max_speed : 0.0);
    if (spec.n_centers == 0) {
        // Straight cruise: already at speed, no heading change, no roll.
        profile.add(n_total, 0.0, spec.max_speed);
        out.arc_speed = spec.max_speed;
        out.speed_clamped = false;
    } else {
        const double omega_arc = out.arc_speed / radius;
        const long n_ramp = std::max<long>(1, static_cast<long>(std::ceil(out.arc_speed / spec.max_accel / dt)));
        const long n_blend = std::max<long>(1, std::lround(spec.blend_time / dt));
        // Hold long enough that each arc sweeps half a turn; the symmetric
        // blend between opposite arcs contributes no net heading.
        const long n_hold = std::max<long>(1, std::lround(kPi / omega_arc / dt));
        const long tail = n_blend + n_ramp;

        profile.add(n_ramp, 0.0, out.arc_speed);
        long arcs = 0;
        while (profile.length() + n_blend + n_hold <= n_drive - tail) {
            const double s = (arcs % 2 == 0) ? 1.0 : -1.0;
            profile.add(n_blend, s * omega_arc, out.arc_speed);
            profile.add(n_hold, s * omega_arc, out.arc_speed);
            ++arcs;
        }
        if (arcs % 2 == 1) {
            profile.pop(2);  // keep left and right turn counts equal
            --arcs;
        }
        if (arcs == 0) {
            // Course too short for a single pair of arcs: drive a plain
            // speed triangle instead of failing.
            profile.pop(1);
            const long n_half = std::max<long>(1, n_drive / 2);
            const double v_peak = std::min(out.arc_speed, spec.max_accel * static_cast<double>(n_half) * dt);
            profile.add(n_half, 0.0, v_peak);
            profile.add(std::min(n_half, n_drive - n_half), 0.0, 0.0);
        } else {
            profile.add(n_blend, 0.0, out.arc_speed);
            profile.add(n_ramp, 0.0, 0.0);
        }
        if (profile.length() < n_total) profile.add(n_total - profile.length(), 0.0, 0.0);
    }

    std::vector<double> yaw_rate, speed;
    profile.sample(n_total, yaw_rate, speed);

    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    out.imu.t.reserve(n_total);
    out.imu.v.reserve(n_total);
    out.a_body.reserve(n_total);
    out.g_body.reserve(n_total);
    out.theta_true_deg.reserve(n_total);

    double psi = 0.0;
    for (long k = 0; k < n_total; ++k) {
        const double v = speed[k];
        const double psi_dot = yaw_rate[k];
        const double v_dot = (speed[k + 1] - speed[k]) / dt;
        const double psi_ddot = (yaw_rate[k + 1] - yaw_rate[k]) / dt;

        const double a_lat = v * psi_dot;
        const double phi = spec.roll_gain * a_lat / kGravity;
        const double phi_dot = spec.roll_gain * (v_dot * psi_dot + v * psi_ddot) / kGravity;

        const double cpsi = std::cos(psi), spsi = std::sin(psi);
        const double cphi = std::cos(phi), sphi = std::sin(phi);

        // Head axes in world coordinates: x right, y up, z rearward.
        const Vec3 xh{cphi * spsi, -cphi * cpsi, -sphi};
        const Vec3 yh{sphi * spsi, -sphi * cpsi, cphi};
        const Vec3 zh{-cpsi, -spsi, 0.0};

        const Vec3 a_world = Vec3{cpsi, spsi, 0.0} * v_dot + Vec3{-spsi, cpsi, 0.0} * (v * psi_dot);
        const Vec3 a_b{dot(a_world, xh), dot(a_world, yh), dot(a_world, zh)};
        const Vec3 g_b = Vec3{-sphi, cphi, 0.0} * kGravity;
        Vec3 f = a_b + g_b;
        Vec3 w{-psi_dot * sphi, psi_dot * cphi, -phi_dot};

        if (spec.accel_noise_sigma > 0.0) {
            f.x += spec.accel_noise_sigma * gauss(rng);
            f.y += spec.accel_noise_sigma * gauss(rng);
            f.z += spec.accel_noise_sigma * gauss(rng);
        }
        if (spec.gyro_noise_sigma > 0.0) {
            w.x += spec.gyro_noise_sigma * gauss(rng);
            w.y += spec.gyro_noise_sigma * gauss(rng);
            w.z += spec.gyro_noise_sigma * gauss(rng);
        }

        out.imu.push_back(static_cast<double>(k) * dt, ImuSample{f, w});
        out.a_body.push_back(a_b);
        out.g_body.push_back(g_b);
        out.theta_true_deg.push_back(90.0 + phi * kDegPerRad);

        psi += 0.5 * (yaw_rate[k] + yaw_rate[k + 1]) * dt;
    }
    return out;
}

namespace {

void validate_scene(const SceneSpec& s) {
    if (s.width < 3 || s.height < 3) throw InputError("scene spec: frame must be at least 3x3");
    if (!(s.fps > 0.0)) throw InputError("scene spec: fps must be positive");
    if (s.duration < 0.0) throw InputError("scene spec: duration must be non-negative");
    if (!(s.stripe_period_px >= 4.0)) throw InputError("scene spec: stripe period must be at least 4 px");
}

}  // namespace

int scene_frame_count(const SceneSpec& spec) {
    validate_scene(spec);
    return static_cast<int>(std::lround(spec.duration * spec.fps));
}

double scene_frame_time(const SceneSpec& spec, int k) { return static_cast<double>(k) / spec.fps; }

double scene_roll_deg(const SceneSpec& spec, int k) {
    const double t = scene_frame_time(spec, k);
    return spec.roll_constant_deg + spec.roll_amplitude_deg * std::sin(2.0 * kPi * spec.roll_freq_hz * t);
}

double scene_theta_true_deg(const SceneSpec& spec, int k) {
    return spec.vertical_angle_deg + scene_roll_deg(spec, k);
}

ColorImage render_scene_frame(const SceneSpec& spec, int k) {
    validate_scene(spec);
    const double theta = scene_theta_true_deg(spec, k);
    if (std::abs(theta - 90.0) > 55.0) throw InputError("scene roll outside +-55 degrees of upright");

    // Stripe normal in image coordinates with y pointing up; the grating's
    // gradient angle then folds to exactly theta for every pixel.
    const double tau = (theta - 90.0) / kDegPerRad;
    const double phase_col = 2.0 * kPi * std::cos(tau) / spec.stripe_period_px;
    const double phase_row = 2.0 * kPi * std::sin(tau) / spec.stripe_period_px;
    const double cos_step = std::cos(phase_col), sin_step = std::sin(phase_col);

    ColorImage img;
    img.width = spec.width;
    img.height = spec.height;
    img.rgb.resize(static_cast<std::size_t>(spec.width) * spec.height * 3);
    std::size_t at = 0;
    for (int i = 0; i < spec.height; ++i) {
        const double y = static_cast<double>(spec.height - 1 - i);
        // March sin/cos across the row instead of calling sin per pixel.
        double s = std::sin(phase_row * y);
        double c = std::cos(phase_row * y);
        for (int j = 0; j < spec.width; ++j) {
            const double val = 0.5 + 0.5 * s;
            const auto byte = static_cast<std::uint8_t>(std::lround(255.0 * std::clamp(val, 0.0, 1.0)));
            img.rgb[at++] = byte;
            img.rgb[at++] = byte;
            img.rgb[at++] = byte;
            const double s_next = s * cos_step + c * sin_step;
            c = c * cos_step - s * sin_step;
            s = s_next;
        }
    }
    return img;
}

}  // namespace svcvv
