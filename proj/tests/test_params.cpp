#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>

#include "doctest.h"
#include "svcvv/errors.hpp"
#include "svcvv/params.hpp"

using namespace svcvv;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "svcvv_params_tests";
    fs::create_directories(dir);
    return dir / name;
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream f(p);
    f << content;
}

}  // namespace

TEST_CASE("presets") {
    const ParameterSet base = ParameterSet::svc();
    CHECK(base.K_vc == 5.0);
    CHECK(base.K_vvc == 0.0);
    CHECK(base.K_a == 0.1);
    CHECK(base.K_omega == 0.1);
    CHECK(base.K_omega_c == 10.0);
    CHECK(base.K_ac == 0.5);
    CHECK(base.tau == 2.0);
    CHECK(base.tau_a == 190.0);
    CHECK(base.tau_d == 7.0);
    CHECK(base.tau_I == 720.0);
    CHECK(base.b == 0.5);
    CHECK(base.P == 85.0);

    const ParameterSet vv = ParameterSet::svc_vv();
    CHECK(vv.K_vc == 2.5);
    CHECK(vv.K_vvc == 2.5);
    CHECK(vv.tau_I == 720.0);  // shared constants stay put
}

TEST_CASE("validation rejects structurally unusable values") {
    ParameterSet p;
    CHECK_NOTHROW(p.validate());

    SUBCASE("non-positive time constants") {
        p.tau = 0.0;
        CHECK_THROWS_AS(p.validate(), InputError);
    }
    SUBCASE("non-positive half-saturation") {
        p.b = -0.5;
        CHECK_THROWS_AS(p.validate(), InputError);
    }
    SUBCASE("incidence ceiling out of range") {
        p.P = 0.0;
        CHECK_THROWS_AS(p.validate(), InputError);
        p.P = 100.5;
        CHECK_THROWS_AS(p.validate(), InputError);
    }
    SUBCASE("singular predictor loops") {
        p.K_omega_c = -1.0;
        CHECK_THROWS_AS(p.validate(), InputError);
        p = ParameterSet{};
        p.K_ac = -1.0;
        CHECK_THROWS_AS(p.validate(), InputError);
    }
    SUBCASE("non-finite values") {
        p.K_vc = std::numeric_limits<double>::quiet_NaN();
        CHECK_THROWS_AS(p.validate(), InputError);
    }
}

TEST_CASE("save/load round trip preserves every field") {
    ParameterSet p = ParameterSet::svc_vv();
    p.K_a = 0.12345678901234567;
    p.tau_I = 717.25;
    const auto path = temp_file("roundtrip.txt");
    save_params(path.string(), p);
    const ParameterSet q = load_params(path.string());
    CHECK(q.K_a == p.K_a);
    CHECK(q.tau_I == p.tau_I);
    CHECK(q.K_vvc == 2.5);
    CHECK(q.hash() == p.hash());
}

TEST_CASE("parameter file validation") {
    SUBCASE("unknown key is rejected with its line") {
        const auto path = temp_file("unknown.txt");
        write_file(path,
                   "K_a = 0.1\nK_omega = 0.1\nK_omega_c = 10\nK_ac = 0.5\nK_vc = 5\nK_vvc = 0\n"
                   "tau = 2\ntau_a = 190\ntau_d = 7\ntau_I = 720\nb = 0.5\nP = 85\nbogus = 1\n");
        CHECK_THROWS_WITH_AS(load_params(path.string()), doctest::Contains(":13"), InputError);
    }
    SUBCASE("duplicate key is rejected") {
        const auto path = temp_file("dup.txt");
        write_file(path,
                   "K_a = 0.1\nK_a = 0.2\nK_omega = 0.1\nK_omega_c = 10\nK_ac = 0.5\nK_vc = 5\nK_vvc = 0\n"
                   "tau = 2\ntau_a = 190\ntau_d = 7\ntau_I = 720\nb = 0.5\nP = 85\n");
        CHECK_THROWS_AS(load_params(path.string()), InputError);
    }
    SUBCASE("missing key is rejected") {
        const auto path = temp_file("missing.txt");
        write_file(path,
                   "K_a = 0.1\nK_omega = 0.1\nK_omega_c = 10\nK_ac = 0.5\nK_vc = 5\nK_vvc = 0\n"
                   "tau = 2\ntau_a = 190\ntau_d = 7\ntau_I = 720\nb = 0.5\n");
        CHECK_THROWS_WITH_AS(load_params(path.string()), doctest::Contains("P"), InputError);
    }
    SUBCASE("malformed number names the line") {
        const auto path = temp_file("badnum.txt");
        write_file(path, "K_a = zero\n");
        CHECK_THROWS_WITH_AS(load_params(path.string()), doctest::Contains(":1"), InputError);
    }
    SUBCASE("comments and blank lines are fine") {
        const auto path = temp_file("comments.txt");
        write_file(path,
                   "# preset with the visual channel\n\nK_a = 0.1\nK_omega = 0.1\nK_omega_c = 10\nK_ac = 0.5\n"
                   "K_vc = 2.5  # split gain\nK_vvc = 2.5\ntau = 2\ntau_a = 190\ntau_d = 7\ntau_I = 720\n"
                   "b = 0.5\nP = 85\n");
        const ParameterSet p = load_params(path.string());
        CHECK(p.K_vc == 2.5);
    }
}

TEST_CASE("hash tracks content, not formatting or order") {
    const ParameterSet a = ParameterSet::svc();
    ParameterSet b = ParameterSet::svc();
    CHECK(a.hash() == b.hash());

    b.K_vc = 5.0000001;
    CHECK(a.hash() != b.hash());

    // Same values through a reordered file: identical hash.
    const auto path = temp_file("reordered.txt");
    write_file(path,
               "P = 85\nb = 0.5\ntau_I = 720\ntau_d = 7\ntau_a = 190\ntau = 2\nK_vvc = 0\nK_vc = 5\n"
               "K_ac = 0.5\nK_omega_c = 10\nK_omega = 0.1\nK_a = 0.1\n");
    CHECK(load_params(path.string()).hash() == a.hash());

    // Presets differ.
    CHECK(ParameterSet::svc().hash() != ParameterSet::svc_vv().hash());
}
