#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "svcvv/internal_model.hpp"

using namespace svcvv;

namespace {
constexpr double kPi = std::numbers::pi;

double angle_between(const Vec3& a, const Vec3& b) {
    const double c = dot(a, b) / (norm(a) * norm(b));
    return std::acos(std::clamp(c, -1.0, 1.0));
}
}  // namespace

TEST_CASE("central canal replica matches the washout closed form") {
    // First-order washout driven by a step: y(t) = e^{-t/tau_d}. The slow
    // adaptation pole of the physical canal is deliberately absent here.
    const double tau_d = 7.0;
    const double dt = 0.01;
    InternalSccState st;
    double worst = 0.0;
    double t = 0.0;
    for (int k = 0; k < 20000; ++k) {
        const Vec3 y = internal_scc_step(st, Vec3{0.0, 1.0, 0.0}, tau_d, dt);
        worst = std::max(worst, std::abs(y.y - std::exp(-t / tau_d)));
        CHECK(y.x == 0.0);
        CHECK(y.z == 0.0);
        t += dt;
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("prediction combiners are plain weighted sums") {
    const Vec3 w{1.0, 2.0, 3.0}, dw{0.1, -0.2, 0.3};
    const Vec3 pw = predicted_omega(w, dw, 0.1, 10.0);
    CHECK(pw.x == doctest::Approx(0.1 + 1.0));
    CHECK(pw.y == doctest::Approx(0.2 - 2.0));
    CHECK(pw.z == doctest::Approx(0.3 + 3.0));

    const Vec3 pa = predicted_acceleration(Vec3{2.0, 0.0, -4.0}, Vec3{0.5, 1.0, 0.0}, 0.1, 0.5);
    CHECK(pa.x == doctest::Approx(0.45));
    CHECK(pa.y == doctest::Approx(0.5));
    CHECK(pa.z == doctest::Approx(-0.4));

    const Vec3 gia = predicted_gia(Vec3{0.0, 9.81, 0.0}, Vec3{1.0, -1.0, 2.0});
    CHECK(gia.x == 1.0);
    CHECK(gia.y == doctest::Approx(8.81));
    CHECK(gia.z == 2.0);
}

TEST_CASE("expected visual vertical is the frontal-plane slice of g_hat") {
    const Vec3 vv = sensed_vv_hat(Vec3{1.0, 9.0, -3.0});
    CHECK(vv.x == 1.0);
    CHECK(vv.y == 9.0);
    CHECK(vv.z == 0.0);
}

TEST_CASE("attitude filter pulls the predicted up onto the measured GIA") {
    ComplementaryFilterConfig cfg;
    const double dt = 0.01;
    const Vec3 f{0.0, 9.81, 0.0};  // upright rest for a rear-facing z axis

    Quaternion q{1.0, 0.0, 0.0, 0.0};  // deliberately 90 degrees off
    for (int k = 0; k < 2000; ++k) q = complementary_filter_step(q, Vec3{}, f, cfg, dt);

    const Vec3 up_pred = rotate(conjugate(q), Vec3{0.0, 0.0, 1.0});
    CHECK(angle_between(up_pred, f) < 1e-3);
    CHECK(std::abs(norm(q) - 1.0) < 1e-12);
}

TEST_CASE("attitude filter ignores the GIA near free fall") {
    ComplementaryFilterConfig cfg;
    Quaternion q = from_axis_angle(Vec3{1.0, 0.0, 0.0}, 0.3);
    const Quaternion q0 = q;
    for (int k = 0; k < 100; ++k) q = complementary_filter_step(q, Vec3{}, Vec3{0.0, 0.01, 0.0}, cfg, 0.01);
    // No gyro motion and no usable GIA: the estimate must not move.
    CHECK(std::abs(q.w - q0.w) < 1e-12);
    CHECK(std::abs(q.x - q0.x) < 1e-12);
}

TEST_CASE("attitude filter tracks a pure rotation exactly through the gyro term") {
    ComplementaryFilterConfig cfg;
    cfg.alpha = 1.0;  // gyro only: isolates the propagation term

    const double w = 0.8;
    const double dt = 0.001;
    Quaternion q{1.0, 0.0, 0.0, 0.0};
    for (int k = 0; k < 3000; ++k) q = complementary_filter_step(q, Vec3{0.0, 0.0, w}, Vec3{}, cfg, dt);

    // Rotating about body z by w*t: compare against the closed-form attitude.
    const Quaternion q_true = from_axis_angle(Vec3{0.0, 0.0, 1.0}, w * 3.0);
    const double align = std::abs(q.w * q_true.w + q.x * q_true.x + q.y * q_true.y + q.z * q_true.z);
    CHECK(align == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("gravity observer counter-rotates the gravity estimate") {
    // Body yaws about its rear axis at a constant rate; in body coordinates
    // gravity must sweep the frontal plane the opposite way, at full 9.81.
    const double w = 1.1;
    const double dt = 0.01;
    Vec3 g{0.0, 9.81, 0.0};
    Quaternion q{1.0, 0.0, 0.0, 0.0};
    double t = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const Quaternion q1 = q * quat_exp_half(Vec3{0.0, 0.0, w * dt});
        g = gravity_observer_step(g, q, q1, dt);
        q = normalized(q1);
        t += dt;
    }
    CHECK(norm(g) == doctest::Approx(9.81).epsilon(1e-12));
    const double angle = std::atan2(g.x, g.y);  // 0 when upright
    CHECK(std::abs(std::remainder(angle - w * t, 2.0 * kPi)) < 1e-4);
    CHECK(std::abs(g.z) < 1e-9);
}

TEST_CASE("internal vertical replica reuses the physical filter bit for bit") {
    const Vec3 v{1.0, 2.0, 3.0}, f{0.0, 9.0, 1.0}, w{0.3, -0.2, 0.1};
    const Vec3 a = internal_lp_step(v, f, w, 2.0, 0.01);
    const Vec3 b = lp_step(v, f, w, 2.0, 0.01);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    CHECK(a.z == b.z);
}

TEST_CASE("gravity expectation integrates the weighted conflicts exactly") {
    // Constant right side: 100 steps of dt=0.01 with K_vc=2.5 and a steady
    // d_v of 0.1 on z must move g_hat by exactly 2.5 * 0.1 * 1 s = 0.25.
    Vec3 g{0.0, 9.81, 0.0};
    for (int k = 0; k < 100; ++k) g = g_hat_step(g, Vec3{}, Vec3{0.0, 0.0, 0.1}, 2.5, 2.5, 0.01);
    CHECK(g.x == 0.0);
    CHECK(g.y == 9.81);
    CHECK(g.z == doctest::Approx(0.25).epsilon(1e-12));

    // Visual channel weighted independently.
    Vec3 g2 = g_hat_step(Vec3{}, Vec3{1.0, 0.0, 0.0}, Vec3{0.0, 1.0, 0.0}, 2.0, 3.0, 0.5);
    CHECK(g2.x == doctest::Approx(1.0));
    CHECK(g2.y == doctest::Approx(1.5));
}
