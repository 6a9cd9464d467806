#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "svcvv/quaternion.hpp"
#include "svcvv/timeseries.hpp"
#include "svcvv/vec3.hpp"

using namespace svcvv;

namespace {
constexpr double kPi = std::numbers::pi;

void check_close(const Vec3& a, const Vec3& b, double tol = 1e-12) {
    CHECK(std::abs(a.x - b.x) <= tol);
    CHECK(std::abs(a.y - b.y) <= tol);
    CHECK(std::abs(a.z - b.z) <= tol);
}
}  // namespace

TEST_CASE("vector arithmetic and products") {
    const Vec3 a{0.1, -0.2, 0.3};
    const Vec3 b{0.4, 0.5, -0.6};

    SUBCASE("cross product, hand-expanded") {
        const Vec3 c = cross(a, b);
        CHECK(c.x == doctest::Approx(-0.03).epsilon(1e-15));
        CHECK(c.y == doctest::Approx(0.18).epsilon(1e-15));
        CHECK(c.z == doctest::Approx(0.13).epsilon(1e-15));
    }
    SUBCASE("cross is antisymmetric") {
        const Vec3 c1 = cross(a, b), c2 = cross(b, a);
        check_close(c1, Vec3{-c2.x, -c2.y, -c2.z});
    }
    SUBCASE("dot and norm") {
        CHECK(dot(a, b) == doctest::Approx(0.04 - 0.10 - 0.18));
        CHECK(norm(Vec3{1.0, 2.0, 2.0}) == doctest::Approx(3.0));
    }
    SUBCASE("cross output is orthogonal to both inputs") {
        const Vec3 c = cross(a, b);
        CHECK(std::abs(dot(c, a)) < 1e-15);
        CHECK(std::abs(dot(c, b)) < 1e-15);
    }
}

TEST_CASE("normalize_to rescales to the requested magnitude") {
    const Vec3 v = normalize_to(Vec3{3.0, 4.0, 0.0}, 9.81);
    CHECK(v.x == doctest::Approx(5.886).epsilon(1e-12));
    CHECK(v.y == doctest::Approx(7.848).epsilon(1e-12));
    CHECK(v.z == 0.0);
    CHECK(norm(v) == doctest::Approx(9.81));

    CHECK_THROWS_AS(normalize_to(Vec3{0.0, 0.0, 0.0}, 1.0), std::domain_error);
}

TEST_CASE("quaternion products follow the i*j = k convention") {
    const Quaternion qi{0.0, 1.0, 0.0, 0.0};
    const Quaternion qj{0.0, 0.0, 1.0, 0.0};
    const Quaternion qk = qi * qj;
    CHECK(qk.w == 0.0);
    CHECK(qk.x == 0.0);
    CHECK(qk.y == 0.0);
    CHECK(qk.z == 1.0);
}

TEST_CASE("rotation basics") {
    SUBCASE("quarter turn about z maps x to y") {
        const Quaternion q = from_axis_angle(Vec3{0.0, 0.0, 1.0}, kPi / 2.0);
        check_close(rotate(q, Vec3{1.0, 0.0, 0.0}), Vec3{0.0, 1.0, 0.0}, 1e-12);
    }
    SUBCASE("rotation preserves length") {
        const Quaternion q = from_axis_angle(Vec3{1.0, 2.0, -0.5}, 1.234);
        const Vec3 v = rotate(q, Vec3{0.3, -0.7, 0.2});
        CHECK(norm(v) == doctest::Approx(norm(Vec3{0.3, -0.7, 0.2})));
    }
    SUBCASE("conjugate inverts the rotation") {
        const Quaternion q = from_axis_angle(Vec3{1.0, -1.0, 0.3}, 0.8);
        const Vec3 v{0.5, 0.25, -1.0};
        check_close(rotate(conjugate(q), rotate(q, v)), v, 1e-12);
    }
}

TEST_CASE("half-angle exponential matches axis-angle") {
    const Quaternion q = quat_exp_half(Vec3{0.0, 0.0, kPi});
    CHECK(q.w == doctest::Approx(0.0).scale(1));
    CHECK(q.z == doctest::Approx(1.0));

    // Small rotations reduce to the first-order map.
    const Quaternion qs = quat_exp_half(Vec3{1e-10, 0.0, 0.0});
    CHECK(qs.w == doctest::Approx(1.0));
    CHECK(qs.x == doctest::Approx(5e-11).epsilon(1e-6));
}

TEST_CASE("shortest_arc maps the source direction onto the target") {
    SUBCASE("quarter turn") {
        const Quaternion q = shortest_arc(Vec3{1.0, 0.0, 0.0}, Vec3{0.0, 1.0, 0.0});
        check_close(rotate(q, Vec3{1.0, 0.0, 0.0}), Vec3{0.0, 1.0, 0.0}, 1e-12);
    }
    SUBCASE("antiparallel input still lands on the target") {
        const Quaternion q = shortest_arc(Vec3{1.0, 0.0, 0.0}, Vec3{-1.0, 0.0, 0.0});
        check_close(rotate(q, Vec3{1.0, 0.0, 0.0}), Vec3{-1.0, 0.0, 0.0}, 1e-12);
    }
    SUBCASE("aligned input gives identity") {
        const Quaternion q = shortest_arc(Vec3{0.0, 0.0, 2.0}, Vec3{0.0, 0.0, 5.0});
        CHECK(q.w == doctest::Approx(1.0));
    }
}

TEST_CASE("finite-difference body rate recovers the true rate") {
    const double dt = 0.01;
    const Vec3 w_true{0.0, 0.0, 2.0};
    const Quaternion q0{1.0, 0.0, 0.0, 0.0};
    const Quaternion q1 = q0 * quat_exp_half(w_true * dt);

    SUBCASE("plain step") {
        const Vec3 w = quat_derivative_body_rate(q0, q1, dt);
        CHECK(w.z == doctest::Approx(2.0).epsilon(1e-4));
        CHECK(std::abs(w.x) < 1e-12);
    }
    SUBCASE("sign flip on q1 gives the same rate (double cover)") {
        const Quaternion q1n{-q1.w, -q1.x, -q1.y, -q1.z};
        const Vec3 w = quat_derivative_body_rate(q0, q1n, dt);
        CHECK(w.z == doctest::Approx(2.0).epsilon(1e-4));
    }
    SUBCASE("rejects non-unit input") {
        CHECK_THROWS_AS(quat_derivative_body_rate(Quaternion{2.0, 0.0, 0.0, 0.0}, q1, dt), std::domain_error);
        CHECK_THROWS_AS(quat_derivative_body_rate(q0, q1, 0.0), std::domain_error);
    }
}

TEST_CASE("time series validation") {
    TimeSeries<double> s;
    s.push_back(0.0, 1.0);
    s.push_back(0.1, 2.0);
    CHECK_NOTHROW(s.validate());
    s.push_back(0.1, 3.0);  // duplicate timestamp
    CHECK_THROWS(s.validate());
}
