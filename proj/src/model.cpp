#include "svcvv/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>

#include "svcvv/errors.hpp"
#include "svcvv/text.hpp"
#include "svcvv/vvp.hpp"

namespace svcvv {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void ensure_finite(const Vec3& v, const char* block) {
    if (!is_finite(v))
        throw std::runtime_error(std::string("numerical divergence in ") + block);
}

double planar_angle_or_nan(const Vec3& v) {
    if (std::hypot(v.x, v.y) < 1e-9) return kNan;
    return fold_half_turn(std::atan2(v.y, v.x) * 180.0 / std::numbers::pi);
}

}  // namespace

Variant parse_variant(const std::string& name) {
    if (name == "svc") return Variant::svc;
    if (name == "svc-vv" || name == "svc_vv") return Variant::svc_vv;
    throw InputError("unknown variant '" + name + "' (expected svc or svc-vv)");
}

const char* variant_name(Variant v) { return v == Variant::svc ? "svc" : "svc-vv"; }

ModelState init_state(const ImuSeries& imu, const ParameterSet& p, const ModelConfig& cfg) {
    p.validate();
    imu.validate();
    if (imu.size() < 2 || imu.t.back() - imu.t.front() < 1.0 - 1e-9)
        throw InputError("insufficient initialization window (need >= 1 s of IMU data)");

    Vec3 sum;
    std::size_t n = 0;
    for (std::size_t i = 0; i < imu.size() && imu.t[i] <= imu.t.front() + 1.0 + 1e-12; ++i) {
        sum += imu.v[i].f;
        ++n;
    }
    Vec3 g0;
    try {
        g0 = normalize_to(sum / static_cast<double>(n), kGravity);
    } catch (const std::domain_error&) {
        throw InputError("initialization window has no usable gravity direction");
    }

    ModelState st;
    st.t = imu.t.front();
    st.v_s = g0;
    st.g = g0;
    st.q = shortest_arc(g0, Vec3{0.0, 0.0, 1.0});  // tilt-only attitude consistent with g0
    st.v_hat_s = g0;
    st.g_hat = cfg.ghat_init == ModelConfig::GhatInit::measured ? g0 : Vec3{};
    return st;
}

StepOutput model_step(ModelState& st, const Vec3& f, const Vec3& omega,
                      const std::optional<Vec3>& vv_s, const ParameterSet& p,
                      const ModelConfig& cfg, double dt) {
    if (!vv_s && p.K_vvc != 0.0)
        throw InputError("visual vertical input required when K_vvc != 0");

    // --- physical sensing -------------------------------------------------
    const Vec3 f_s = oto_sense(f);
    const Vec3 omega_s = scc_step(st.scc, omega, SccParams{p.tau_a, p.tau_d}, dt);
    ensure_finite(omega_s, "canal dynamics");

    const Vec3 a_s = sensed_acceleration(f_s, st.v_s);
    const Vec3 v_s_next = lp_step(st.v_s, f_s, omega_s, p.tau, dt);
    ensure_finite(v_s_next, "sensed vertical");

    // --- observers ---------------------------------------------------------
    const Quaternion q_next = complementary_filter_step(st.q, omega, f, cfg.filter, dt);
    const Vec3 g_next = gravity_observer_step(st.g, st.q, q_next, dt);
    ensure_finite(g_next, "gravity observer");
    const Vec3 a = f - st.g;

    // --- expectation path ----------------------------------------------------
    StepOutput out;
    out.g = st.g;
    ConflictSignals& c = out.conflicts;

    c.d_v = st.v_s - st.v_hat_s;
    const Vec3 vv_hat_s = sensed_vv_hat(st.g_hat);
    c.d_vv = vv_s ? (*vv_s - vv_hat_s) : Vec3{};

    // Rotation loop: the canal replica has unit feedthrough (output = input
    // minus its per-axis memory x), so the conflict solves in closed form:
    //   d_omega = (omega_s - K_omega*omega + x) / (1 + K_omega_c)
    const Vec3 x_hat{st.scc_hat.x[0], st.scc_hat.x[1], st.scc_hat.x[2]};
    c.d_omega = (omega_s - p.K_omega * omega + x_hat) / (1.0 + p.K_omega_c);
    const Vec3 omega_hat = predicted_omega(omega, c.d_omega, p.K_omega, p.K_omega_c);
    const Vec3 omega_hat_s = internal_scc_step(st.scc_hat, omega_hat, p.tau_d, dt);
    ensure_finite(omega_hat_s, "expected canal dynamics");

    // Acceleration loop, same treatment: expected sensed acceleration is
    // g_hat + a_hat - v_hat_s, linear in the conflict:
    //   d_a = (a_s - g_hat - K_a*a + v_hat_s) / (1 + K_ac)
    c.d_a = (a_s - st.g_hat - p.K_a * a + st.v_hat_s) / (1.0 + p.K_ac);
    const Vec3 a_hat = predicted_acceleration(a, c.d_a, p.K_a, p.K_ac);
    const Vec3 f_hat_s = predicted_gia(st.g_hat, a_hat);
    const Vec3 v_hat_s_next = internal_lp_step(st.v_hat_s, f_hat_s, omega_hat_s, p.tau, dt);
    ensure_finite(v_hat_s_next, "expected vertical");

    const Vec3 g_hat_next = g_hat_step(st.g_hat, c.d_vv, c.d_v, p.K_vvc, p.K_vc, dt);
    ensure_finite(g_hat_next, "gravity expectation");

    // --- incidence -----------------------------------------------------------
    out.hill = hill(c.d_v, p.b);
    out.msi = msi_step(st.msi, out.hill, p.P, p.tau_I, dt);
    if (!std::isfinite(out.msi))
        throw std::runtime_error("numerical divergence in incidence stage");

    // --- commit --------------------------------------------------------------
    st.v_s = v_s_next;
    st.q = q_next;
    st.g = g_next;
    st.v_hat_s = v_hat_s_next;
    st.g_hat = g_hat_next;
    st.t += dt;
    return out;
}

TrialResult run_trial(const ImuSeries& imu, const std::optional<TimeSeries<Vec3>>& vv,
                      const ParameterSet& p, Variant variant, const ModelConfig& cfg) {
    p.validate();
    imu.validate();
    if (imu.size() < 2) throw InputError("trial needs at least two IMU samples");
    const double dt = imu.t[1] - imu.t[0];
    for (std::size_t i = 1; i < imu.size(); ++i)
        if (std::abs(imu.t[i] - imu.t[i - 1] - dt) > 1e-6 * dt)
            throw InputError("IMU grid not uniform at sample " + std::to_string(i));

    if (variant == Variant::svc && p.K_vvc != 0.0)
        throw InputError("variant svc requires K_vvc = 0");
    if (variant == Variant::svc_vv && !vv)
        throw InputError("variant svc-vv requires a visual vertical series");

    const bool use_vv = variant == Variant::svc_vv;
    if (use_vv) {
        if (vv->size() != imu.size())
            throw InputError("visual vertical series length differs from IMU grid");
        for (std::size_t i = 0; i < imu.size(); ++i)
            if (std::abs(vv->t[i] - imu.t[i]) > 0.5 * dt)
                throw InputError("visual vertical misaligned beyond half a sample at index " +
                                 std::to_string(i));
    }

    ModelState st = init_state(imu, p, cfg);
    TrialResult r;
    r.variant = variant;
    r.params_hash = p.hash();
    const std::size_t n = imu.size();
    r.t.reserve(n);
    r.msi.reserve(n);
    r.norm_dv.reserve(n);
    r.norm_dvv.reserve(n);
    r.theta_vv.reserve(n);
    r.theta_g.reserve(n);

    double msi_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::optional<Vec3> vv_i =
            use_vv ? std::optional<Vec3>(vv->v[i]) : std::nullopt;
        const StepOutput out = model_step(st, imu.v[i].f, imu.v[i].omega, vv_i, p, cfg, dt);
        r.t.push_back(imu.t[i]);
        r.msi.push_back(out.msi);
        r.norm_dv.push_back(norm(out.conflicts.d_v));
        r.norm_dvv.push_back(use_vv ? norm(out.conflicts.d_vv) : kNan);
        r.theta_vv.push_back(use_vv ? planar_angle_or_nan(*vv_i) : kNan);
        r.theta_g.push_back(planar_angle_or_nan(out.g));
        msi_sum += out.msi;
        r.max_msi = std::max(r.max_msi, out.msi);
    }
    r.mean_msi = msi_sum / static_cast<double>(n);
    return r;
}

namespace {
constexpr const char* kTrialHeader = "t,msi,norm_dv,norm_dvv,theta_vv,theta_g";
}

void save_trial(const std::string& path, const TrialResult& r) {
    std::ofstream out(path);
    if (!out) throw InputError(path + ": cannot open for writing");
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(r.params_hash));
    out << "# params_hash=" << hash << "\n";
    out << "# variant=" << variant_name(r.variant) << "\n";
    out << kTrialHeader << "\n";
    for (std::size_t i = 0; i < r.t.size(); ++i) {
        out << fmt_full(r.t[i]) << ',' << fmt_g(r.msi[i]) << ',' << fmt_g(r.norm_dv[i]) << ','
            << fmt_g(r.norm_dvv[i]) << ',' << fmt_g(r.theta_vv[i]) << ',' << fmt_g(r.theta_g[i]) << "\n";
    }
    if (!out.good()) throw InputError(path + ": write failed");
}

TrialResult load_trial(const std::string& path) {
    const auto lines = read_lines(path);
    TrialResult r;
    std::size_t i = 0;
    bool saw_header = false;
    for (; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty()) continue;
        if (line.rfind("# params_hash=", 0) == 0) {
            r.params_hash = std::strtoull(line.c_str() + 14, nullptr, 16);
        } else if (line.rfind("# variant=", 0) == 0) {
            r.variant = parse_variant(line.substr(10));
        } else if (line == kTrialHeader) {
            saw_header = true;
            ++i;
            break;
        } else {
            throw InputError(path + ":" + std::to_string(i + 1) + ": unexpected line before header");
        }
    }
    if (!saw_header) throw InputError(path + ": missing trial header '" + std::string(kTrialHeader) + "'");
    double msi_sum = 0.0;
    for (; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty()) continue;
        const std::string ctx = path + ":" + std::to_string(i + 1);
        const auto parts = split(line, ',');
        if (parts.size() != 6) throw InputError(ctx + ": expected 6 fields, got " + std::to_string(parts.size()));
        r.t.push_back(parse_double(parts[0], ctx));
        r.msi.push_back(parse_double(parts[1], ctx));
        r.norm_dv.push_back(parse_double(parts[2], ctx));
        r.norm_dvv.push_back(parse_double(parts[3], ctx));
        r.theta_vv.push_back(parse_double(parts[4], ctx));
        r.theta_g.push_back(parse_double(parts[5], ctx));
        msi_sum += r.msi.back();
        r.max_msi = std::max(r.max_msi, r.msi.back());
    }
    if (r.t.empty()) throw InputError(path + ": no samples");
    r.mean_msi = msi_sum / static_cast<double>(r.t.size());
    return r;
}

}  // namespace svcvv
