#include <cmath>

#include "doctest.h"
#include "svcvv/vestibular.hpp"

using namespace svcvv;

namespace {

// Closed form for the canal band-pass driven by a rate step of amplitude A:
// with p = 1/tau_a and q = 1/tau_d the response is
//   y(t) = A (q e^{-q t} - p e^{-p t}) / (q - p).
double canal_step_response(double amplitude, double t, const SccParams& p) {
    const double pp = 1.0 / p.tau_a;
    const double qq = 1.0 / p.tau_d;
    return amplitude * (qq * std::exp(-qq * t) - pp * std::exp(-pp * t)) / (qq - pp);
}

}  // namespace

TEST_CASE("canal dynamics follow the analytic step response") {
    const SccParams p;
    const double dt = 0.01;
    const double amplitude = 0.7;
    SccState state;

    double worst = 0.0;
    double t = 0.0;
    for (int k = 0; k < 20000; ++k) {  // 200 s covers the fast pole and a good part of the slow one
        const Vec3 y = scc_step(state, Vec3{amplitude, 0.0, 0.0}, p, dt);
        worst = std::max(worst, std::abs(y.x - canal_step_response(amplitude, t, p)));
        CHECK(y.y == 0.0);  // axes do not couple
        CHECK(y.z == 0.0);
        t += dt;
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("canal output passes a step instantly and then washes out") {
    const SccParams p;
    SccState state;
    const Vec3 first = scc_step(state, Vec3{0.0, 0.0, 1.0}, p, 0.01);
    CHECK(first.z == 1.0);  // unit feedthrough at the step instant

    // Long constant rotation: the sensed rotation decays toward zero and
    // (with adaptation) overshoots slightly negative on the way.
    double y = first.z;
    double min_y = y;
    for (int k = 1; k < 600000; ++k) {  // 6000 s
        y = scc_step(state, Vec3{0.0, 0.0, 1.0}, p, 0.01).z;
        min_y = std::min(min_y, y);
    }
    CHECK(std::abs(y) < 1e-3);
    CHECK(min_y < -0.02);  // adaptation undershoot is a real feature
    CHECK(min_y > -0.04);
}

TEST_CASE("otolith transfer is unity") {
    const Vec3 f{1.0, -2.0, 3.5};
    const Vec3 s = oto_sense(f);
    CHECK(s.x == f.x);
    CHECK(s.y == f.y);
    CHECK(s.z == f.z);
}

TEST_CASE("sensed vertical relaxes toward the GIA with time constant tau") {
    const double tau = 2.0;
    const double dt = 0.01;
    const Vec3 f{0.0, 9.81, 0.0};
    Vec3 v{0.0, 0.0, 0.0};

    double t = 0.0;
    double worst = 0.0;
    for (int k = 0; k < 3000; ++k) {
        v = lp_step(v, f, Vec3{}, tau, dt);
        t += dt;
        const double expected = 9.81 * (1.0 - std::exp(-t / tau));
        worst = std::max(worst, std::abs(v.y - expected));
        CHECK(v.x == 0.0);
        CHECK(v.z == 0.0);
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("rotation transports the sensed vertical without changing its decay") {
    // With no GIA drive the filter is dv/dt = -v/tau - w x v; rotation is
    // norm-preserving, so |v| must decay exactly like the scalar lag.
    const double tau = 2.0;
    const double dt = 0.001;
    const double w = 1.3;
    Vec3 v{9.81, 0.0, 0.0};

    double t = 0.0;
    for (int k = 0; k < 2000; ++k) {
        v = lp_step(v, Vec3{}, Vec3{0.0, 0.0, w}, tau, dt);
        t += dt;
    }
    CHECK(norm(v) == doctest::Approx(9.81 * std::exp(-t / tau)).epsilon(1e-8));
    // The plane of rotation is x-y for a z rate; nothing may leak into z.
    CHECK(v.z == 0.0);
    // Direction rotated by -w t (transport is the negative cross product).
    const double angle = std::atan2(v.y, v.x);
    CHECK(std::abs(std::remainder(angle - (-w * t), 2.0 * std::acos(-1.0))) < 1e-6);
}

TEST_CASE("sensed acceleration is the GIA beyond the sensed vertical") {
    const Vec3 a = sensed_acceleration(Vec3{1.0, 9.81, 0.0}, Vec3{0.0, 9.81, 0.0});
    CHECK(a.x == 1.0);
    CHECK(a.y == 0.0);
    CHECK(a.z == 0.0);
}
