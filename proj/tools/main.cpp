#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "svcvv/errors.hpp"
#include "svcvv/eval.hpp"
#include "svcvv/image.hpp"
#include "svcvv/ingest.hpp"
#include "svcvv/model.hpp"
#include "svcvv/parallel.hpp"
#include "svcvv/params.hpp"
#include "svcvv/plot.hpp"
#include "svcvv/synth.hpp"
#include "svcvv/text.hpp"
#include "svcvv/vvp.hpp"

namespace fs = std::filesystem;
using namespace svcvv;

namespace {

bool parse_bool(const std::string& value, const std::string& ctx) {
    if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
    if (value == "0" || value == "false" || value == "no" || value == "off") return false;
    throw InputError(ctx + ": expected a boolean, got '" + value + "'");
}

std::uint64_t parse_u64(const std::string& value, const std::string& ctx) {
    const std::string t = trim(value);
    if (t.empty() || t[0] == '-') throw InputError(ctx + ": expected a non-negative integer, got '" + value + "'");
    char* end = nullptr;
    const unsigned long long v = std::strtoull(t.c_str(), &end, 10);
    if (end != t.c_str() + t.size()) throw InputError(ctx + ": malformed integer '" + t + "'");
    return v;
}

struct CropSpec {
    int width = 0;
    int height = 0;
    bool enabled = false;
};

CropSpec parse_crop(const std::string& text) {
    if (text.empty() || text == "none") return {};
    const std::size_t pos = text.find_first_of("xX");
    if (pos == std::string::npos) throw InputError("--crop: expected WIDTHxHEIGHT, got '" + text + "'");
    CropSpec c;
    c.width = static_cast<int>(parse_long(text.substr(0, pos), "--crop"));
    c.height = static_cast<int>(parse_long(text.substr(pos + 1), "--crop"));
    if (c.width <= 0 || c.height <= 0) throw InputError("--crop: dimensions must be positive");
    c.enabled = true;
    return c;
}

std::string hash_hex(std::uint64_t h) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void ensure_out_dir(const std::string& out) {
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw InputError(out + ": cannot create output directory (" + ec.message() + ")");
}

/// Every command records the configuration it actually ran with, after any
/// config-file overrides, so a run can be reproduced from its output alone.
void write_run_config(const std::string& out, const std::string& command,
                      const std::vector<std::pair<std::string, std::string>>& entries) {
    const std::string path = out + "/run_config.txt";
    std::ofstream f(path);
    if (!f) throw InputError(path + ": cannot open for writing");
    f << "command = " << command << "\n";
    for (const auto& [k, v] : entries) f << k << " = " << v << "\n";
    if (!f.good()) throw InputError(path + ": write failed");
}

/// Values from --config replace values given on the command line.
using OverrideTable = std::map<std::string, std::function<void(const std::string& value, const std::string& ctx)>>;

void apply_config(const std::string& path, const OverrideTable& table) {
    for (const auto& kv : parse_key_values(path)) {
        const std::string ctx = path + ":" + std::to_string(kv.line);
        const auto it = table.find(kv.key);
        if (it == table.end()) throw InputError(ctx + ": unknown config key '" + kv.key + "'");
        it->second(kv.value, ctx);
    }
}

std::vector<VvEstimate> estimate_frames(const std::vector<FrameRef>& frames, const CropSpec& crop, double theta0,
                                        int jobs) {
    std::vector<FrameAnalysis> analyses(frames.size());
    parallel_for(frames.size(), jobs, [&](std::size_t i) {
        ColorImage img = read_ppm(frames[i].path);
        if (crop.enabled) img = crop_center(img, crop.width, crop.height);
        analyses[i] = analyze_frame(img);
    });
    VvEstimator estimator(theta0);
    std::vector<VvEstimate> out;
    out.reserve(frames.size());
    for (std::size_t i = 0; i < frames.size(); ++i) out.push_back(estimator.advance(analyses[i], frames[i].t));
    return out;
}

ImuSeries clip_imu(const ImuSeries& imu, double t0, double t1) {
    ImuSeries out;
    for (std::size_t i = 0; i < imu.size(); ++i)
        if (imu.t[i] >= t0 - 1e-9 && imu.t[i] <= t1 + 1e-9) out.push_back(imu.t[i], imu.v[i]);
    if (out.size() < 2) throw InputError("no temporal overlap between IMU and visual vertical");
    return out;
}

void check_theta0(double theta0) {
    if (theta0 < 30.0 || theta0 > 150.0) throw InputError("--theta0 must lie in [30, 150]");
}

// ---------------------------------------------------------------- vv command

struct VvArgs {
    std::string frames, out, crop_text, config;
    double theta0 = 90.0;
    int jobs = 1;
    bool lenient = false;
};

void run_vv(VvArgs& a) {
    if (!a.config.empty()) {
        OverrideTable t{
            {"frames", [&](const std::string& v, const std::string&) { a.frames = v; }},
            {"out", [&](const std::string& v, const std::string&) { a.out = v; }},
            {"crop", [&](const std::string& v, const std::string&) { a.crop_text = v; }},
            {"theta0", [&](const std::string& v, const std::string& c) { a.theta0 = parse_double(v, c); }},
            {"jobs", [&](const std::string& v, const std::string& c) { a.jobs = static_cast<int>(parse_long(v, c)); }},
            {"lenient", [&](const std::string& v, const std::string& c) { a.lenient = parse_bool(v, c); }},
        };
        apply_config(a.config, t);
    }
    check_theta0(a.theta0);
    const CropSpec crop = parse_crop(a.crop_text);
    const auto frames = load_frames(a.frames, !a.lenient);
    if (frames.empty()) throw InputError(a.frames + ": frame index is empty");

    const auto estimates = estimate_frames(frames, crop, a.theta0, a.jobs);
    VvRecord rec;
    for (const auto& e : estimates) {
        rec.vv.push_back(e.t, e.vv);
        rec.theta_deg.push_back(e.theta_deg);
        rec.quality.push_back(e.held ? 1 : 0);
    }
    ensure_out_dir(a.out);
    save_vv(a.out + "/vv.csv", rec);

    std::vector<double> ts = rec.vv.t;
    plot_line_chart(a.out + "/theta.ppm", "estimated visual vertical", "time [s]", "theta [deg]", ts, rec.theta_deg);
    write_run_config(a.out, "vv",
                     {{"frames", a.frames},
                      {"out", a.out},
                      {"crop", a.crop_text.empty() ? "none" : a.crop_text},
                      {"theta0", fmt_g(a.theta0)},
                      {"jobs", std::to_string(a.jobs)},
                      {"lenient", a.lenient ? "true" : "false"}});
    std::cout << "estimated " << estimates.size() << " frames -> " << a.out << "/vv.csv\n";
}

// ----------------------------------------------------------- predict command

struct PredictArgs {
    std::string imu, frames, vv, params, variant_text = "svc", out, crop_text, config, ghat_text = "measured";
    double rate = 100.0;
    double theta0 = 90.0;
    double filter_alpha = 0.98;
    int jobs = 1;
    bool lenient = false;
};

void run_predict(PredictArgs& a) {
    if (!a.config.empty()) {
        OverrideTable t{
            {"imu", [&](const std::string& v, const std::string&) { a.imu = v; }},
            {"frames", [&](const std::string& v, const std::string&) { a.frames = v; }},
            {"vv", [&](const std::string& v, const std::string&) { a.vv = v; }},
            {"params", [&](const std::string& v, const std::string&) { a.params = v; }},
            {"variant", [&](const std::string& v, const std::string&) { a.variant_text = v; }},
            {"out", [&](const std::string& v, const std::string&) { a.out = v; }},
            {"crop", [&](const std::string& v, const std::string&) { a.crop_text = v; }},
            {"ghat-init", [&](const std::string& v, const std::string&) { a.ghat_text = v; }},
            {"rate", [&](const std::string& v, const std::string& c) { a.rate = parse_double(v, c); }},
            {"theta0", [&](const std::string& v, const std::string& c) { a.theta0 = parse_double(v, c); }},
            {"filter-alpha", [&](const std::string& v, const std::string& c) { a.filter_alpha = parse_double(v, c); }},
            {"jobs", [&](const std::string& v, const std::string& c) { a.jobs = static_cast<int>(parse_long(v, c)); }},
            {"lenient", [&](const std::string& v, const std::string& c) { a.lenient = parse_bool(v, c); }},
        };
        apply_config(a.config, t);
    }
    if (!a.frames.empty() && !a.vv.empty()) throw InputError("--frames and --vv are mutually exclusive");
    if (!(a.rate > 0.0)) throw InputError("--rate must be positive");
    if (!(a.filter_alpha >= 0.0 && a.filter_alpha < 1.0)) throw InputError("--filter-alpha must lie in [0, 1)");
    check_theta0(a.theta0);

    const Variant variant = parse_variant(a.variant_text);
    ModelConfig cfg;
    cfg.filter.alpha = a.filter_alpha;
    if (a.ghat_text == "measured")
        cfg.ghat_init = ModelConfig::GhatInit::measured;
    else if (a.ghat_text == "zero")
        cfg.ghat_init = ModelConfig::GhatInit::zero;
    else
        throw InputError("--ghat-init must be 'measured' or 'zero'");

    ImuSeries imu = load_imu(a.imu, a.rate, !a.lenient);
    std::optional<TimeSeries<Vec3>> vv;
    if (!a.frames.empty()) {
        const CropSpec crop = parse_crop(a.crop_text);
        const auto frame_refs = load_frames(a.frames, !a.lenient);
        SyncResult sync = synchronize(imu, frame_refs);
        imu = std::move(sync.imu);
        const auto estimates = estimate_frames(sync.frames, crop, a.theta0, a.jobs);
        TimeSeries<Vec3> vv_frames;
        for (const auto& e : estimates) vv_frames.push_back(e.t, e.vv);
        vv = zoh_resample(vv_frames, imu.t);
    } else if (!a.vv.empty()) {
        const VvRecord rec = load_vv(a.vv);
        if (rec.vv.empty()) throw InputError(a.vv + ": empty visual vertical series");
        const double period =
            rec.vv.size() >= 2 ? rec.vv.t.back() - rec.vv.t[rec.vv.size() - 2] : 0.0;
        imu = clip_imu(imu, rec.vv.t.front(), rec.vv.t.back() + period);
        vv = zoh_resample(rec.vv, imu.t);
    }

    const ParameterSet p =
        a.params.empty() ? (variant == Variant::svc ? ParameterSet::svc() : ParameterSet::svc_vv())
                         : load_params(a.params);
    const TrialResult res = run_trial(imu, vv, p, variant, cfg);

    ensure_out_dir(a.out);
    save_trial(a.out + "/trial.csv", res);
    plot_line_chart(a.out + "/msi.ppm", "predicted incidence", "time [s]", "MSI [%]", res.t, res.msi);
    {
        const std::string path = a.out + "/summary.txt";
        std::ofstream f(path);
        if (!f) throw InputError(path + ": cannot open for writing");
        f << "variant = " << variant_name(res.variant) << "\n";
        f << "params_hash = " << hash_hex(res.params_hash) << "\n";
        f << "samples = " << res.t.size() << "\n";
        f << "duration_s = " << fmt_g(res.t.back() - res.t.front()) << "\n";
        f << "mean_msi = " << fmt_g(res.mean_msi) << "\n";
        f << "max_msi = " << fmt_g(res.max_msi) << "\n";
        if (!f.good()) throw InputError(path + ": write failed");
    }
    write_run_config(a.out, "predict",
                     {{"imu", a.imu},
                      {"frames", a.frames.empty() ? "none" : a.frames},
                      {"vv", a.vv.empty() ? "none" : a.vv},
                      {"params", a.params.empty() ? "preset" : a.params},
                      {"variant", variant_name(variant)},
                      {"out", a.out},
                      {"crop", a.crop_text.empty() ? "none" : a.crop_text},
                      {"rate", fmt_g(a.rate)},
                      {"theta0", fmt_g(a.theta0)},
                      {"filter-alpha", fmt_g(a.filter_alpha)},
                      {"ghat-init", a.ghat_text},
                      {"jobs", std::to_string(a.jobs)},
                      {"lenient", a.lenient ? "true" : "false"}});
    std::cout << "simulated " << res.t.size() << " samples, mean MSI " << fmt_g(res.mean_msi) << "%, max MSI "
              << fmt_g(res.max_msi) << "% -> " << a.out << "/trial.csv\n";
}

// ------------------------------------------------------------- synth command

struct SynthFile {
    SlalomSpec slalom;
    SceneSpec scene;
    bool scene_enabled = false;
};

SynthFile load_synth_spec(const std::string& path) {
    SynthFile s;
    using Setter = std::function<void(const std::string&, const std::string&)>;
    const std::map<std::string, Setter> table{
        {"slalom.rotation_diameter", [&](const std::string& v, const std::string& c) { s.slalom.rotation_diameter = parse_double(v, c); }},
        {"slalom.n_centers", [&](const std::string& v, const std::string& c) { s.slalom.n_centers = static_cast<int>(parse_long(v, c)); }},
        {"slalom.max_speed", [&](const std::string& v, const std::string& c) { s.slalom.max_speed = parse_double(v, c); }},
        {"slalom.max_accel", [&](const std::string& v, const std::string& c) { s.slalom.max_accel = parse_double(v, c); }},
        {"slalom.duration", [&](const std::string& v, const std::string& c) { s.slalom.duration = parse_double(v, c); }},
        {"slalom.dt", [&](const std::string& v, const std::string& c) { s.slalom.dt = parse_double(v, c); }},
        {"slalom.blend_time", [&](const std::string& v, const std::string& c) { s.slalom.blend_time = parse_double(v, c); }},
        {"slalom.roll_gain", [&](const std::string& v, const std::string& c) { s.slalom.roll_gain = parse_double(v, c); }},
        {"slalom.rest_time", [&](const std::string& v, const std::string& c) { s.slalom.rest_time = parse_double(v, c); }},
        {"slalom.accel_noise_sigma", [&](const std::string& v, const std::string& c) { s.slalom.accel_noise_sigma = parse_double(v, c); }},
        {"slalom.gyro_noise_sigma", [&](const std::string& v, const std::string& c) { s.slalom.gyro_noise_sigma = parse_double(v, c); }},
        {"slalom.seed", [&](const std::string& v, const std::string& c) { s.slalom.seed = parse_u64(v, c); }},
        {"scene.enabled", [&](const std::string& v, const std::string& c) { s.scene_enabled = parse_bool(v, c); }},
        {"scene.width", [&](const std::string& v, const std::string& c) { s.scene.width = static_cast<int>(parse_long(v, c)); }},
        {"scene.height", [&](const std::string& v, const std::string& c) { s.scene.height = static_cast<int>(parse_long(v, c)); }},
        {"scene.fps", [&](const std::string& v, const std::string& c) { s.scene.fps = parse_double(v, c); }},
        {"scene.duration", [&](const std::string& v, const std::string& c) { s.scene.duration = parse_double(v, c); }},
        {"scene.stripe_period_px", [&](const std::string& v, const std::string& c) { s.scene.stripe_period_px = parse_double(v, c); }},
        {"scene.vertical_angle_deg", [&](const std::string& v, const std::string& c) { s.scene.vertical_angle_deg = parse_double(v, c); }},
        {"scene.roll_constant_deg", [&](const std::string& v, const std::string& c) { s.scene.roll_constant_deg = parse_double(v, c); }},
        {"scene.roll_amplitude_deg", [&](const std::string& v, const std::string& c) { s.scene.roll_amplitude_deg = parse_double(v, c); }},
        {"scene.roll_freq_hz", [&](const std::string& v, const std::string& c) { s.scene.roll_freq_hz = parse_double(v, c); }},
    };
    for (const auto& kv : parse_key_values(path)) {
        const std::string ctx = path + ":" + std::to_string(kv.line);
        const auto it = table.find(kv.key);
        if (it == table.end()) throw InputError(ctx + ": unknown spec key '" + kv.key + "'");
        it->second(kv.value, ctx);
    }
    return s;
}

struct SynthArgs {
    std::string spec, out, config;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int jobs = 1;
};

void run_synth(SynthArgs& a) {
    if (!a.config.empty()) {
        OverrideTable t{
            {"spec", [&](const std::string& v, const std::string&) { a.spec = v; }},
            {"out", [&](const std::string& v, const std::string&) { a.out = v; }},
            {"seed",
             [&](const std::string& v, const std::string& c) {
                 a.seed = parse_u64(v, c);
                 a.seed_set = true;
             }},
            {"jobs", [&](const std::string& v, const std::string& c) { a.jobs = static_cast<int>(parse_long(v, c)); }},
        };
        apply_config(a.config, t);
    }
    SynthFile spec = load_synth_spec(a.spec);
    if (a.seed_set) spec.slalom.seed = a.seed;

    const SlalomTruth truth = gen_slalom(spec.slalom);
    ensure_out_dir(a.out);
    save_imu(a.out + "/imu.csv", truth.imu);
    {
        const std::string path = a.out + "/truth.csv";
        std::ofstream f(path);
        if (!f) throw InputError(path + ": cannot open for writing");
        f << "t,theta_true_deg,ax,ay,az,gx,gy,gz\n";
        for (std::size_t i = 0; i < truth.imu.size(); ++i) {
            const Vec3& ab = truth.a_body[i];
            const Vec3& gb = truth.g_body[i];
            f << fmt_full(truth.imu.t[i]) << ',' << fmt_g(truth.theta_true_deg[i]) << ',' << fmt_g(ab.x) << ','
              << fmt_g(ab.y) << ',' << fmt_g(ab.z) << ',' << fmt_g(gb.x) << ',' << fmt_g(gb.y) << ',' << fmt_g(gb.z)
              << "\n";
        }
        if (!f.good()) throw InputError(path + ": write failed");
    }

    int n_frames = 0;
    if (spec.scene_enabled) {
        const std::string frame_dir = a.out + "/frames";
        ensure_out_dir(frame_dir);
        n_frames = scene_frame_count(spec.scene);
        {
            std::ofstream idx(frame_dir + "/index.txt");
            if (!idx) throw InputError(frame_dir + "/index.txt: cannot open for writing");
            for (int k = 0; k < n_frames; ++k)
                idx << k << ' ' << fmt_full(scene_frame_time(spec.scene, k)) << "\n";
            if (!idx.good()) throw InputError(frame_dir + "/index.txt: write failed");
        }
        parallel_for(static_cast<std::size_t>(n_frames), a.jobs, [&](std::size_t k) {
            char name[32];
            std::snprintf(name, sizeof name, "/frame_%06zu.ppm", k);
            write_ppm(frame_dir + name, render_scene_frame(spec.scene, static_cast<int>(k)));
        });
    }

    {
        const std::string path = a.out + "/summary.txt";
        std::ofstream f(path);
        if (!f) throw InputError(path + ": cannot open for writing");
        f << "imu_rows = " << truth.imu.size() << "\n";
        f << "arc_speed = " << fmt_g(truth.arc_speed) << "\n";
        f << "speed_clamped = " << (truth.speed_clamped ? "true" : "false") << "\n";
        f << "scene_frames = " << n_frames << "\n";
        if (!f.good()) throw InputError(path + ": write failed");
    }
    write_run_config(a.out, "synth",
                     {{"spec", a.spec},
                      {"out", a.out},
                      {"seed", a.seed_set ? std::to_string(a.seed) : std::to_string(spec.slalom.seed)},
                      {"jobs", std::to_string(a.jobs)}});
    std::cout << "generated " << truth.imu.size() << " IMU rows";
    if (spec.scene_enabled) std::cout << " and " << n_frames << " frames";
    std::cout << " -> " << a.out << "\n";
}

// -------------------------------------------------------------- eval command

struct EvalArgs {
    std::string summaries, out, config, measure_text = "mean";
};

void run_eval(EvalArgs& a) {
    if (!a.config.empty()) {
        OverrideTable t{
            {"summaries", [&](const std::string& v, const std::string&) { a.summaries = v; }},
            {"measure", [&](const std::string& v, const std::string&) { a.measure_text = v; }},
            {"out", [&](const std::string& v, const std::string&) { a.out = v; }},
        };
        apply_config(a.config, t);
    }
    const Measure measure = parse_measure(a.measure_text);
    const auto rows = load_cohort(a.summaries);
    if (rows.empty()) throw InputError(a.summaries + ": no cohort rows");
    const auto outcomes = pair_conditions(rows, measure);
    const ConfusionMatrix cm = confusion(outcomes);
    const MetricReport mr = metrics(cm);

    std::vector<double> misc, msi;
    for (const auto& r : rows) {
        misc.push_back(measure == Measure::mean ? r.mean_misc : r.max_misc);
        msi.push_back(measure == Measure::mean ? r.mean_msi : r.max_msi);
    }
    std::string pearson_text = "n/a";
    try {
        pearson_text = fmt_g(pearson(misc, msi));
    } catch (const std::domain_error&) {
        // constant column; correlation undefined
    }

    ensure_out_dir(a.out);
    const auto opt_text = [](const std::optional<double>& v) { return v ? fmt_g(*v) : std::string("n/a"); };
    {
        const std::string path = a.out + "/metrics.txt";
        std::ofstream f(path);
        if (!f) throw InputError(path + ": cannot open for writing");
        f << "measure = " << a.measure_text << "\n";
        f << "participants = " << outcomes.size() << "\n";
        f << "tp = " << cm.tp << "\n";
        f << "fp = " << cm.fp << "\n";
        f << "fn = " << cm.fn << "\n";
        f << "tn = " << cm.tn << "\n";
        f << "accuracy = " << opt_text(mr.accuracy) << "\n";
        f << "precision = " << opt_text(mr.precision) << "\n";
        f << "recall = " << opt_text(mr.recall) << "\n";
        f << "f1 = " << opt_text(mr.f1) << "\n";
        f << "pearson_misc_msi = " << pearson_text << "\n";
        if (!f.good()) throw InputError(path + ": write failed");
    }
    plot_eval_report(a.out + "/eval.ppm", cm, mr,
                     "measure=" + a.measure_text + " n=" + std::to_string(outcomes.size()));
    write_run_config(a.out, "eval",
                     {{"summaries", a.summaries}, {"measure", a.measure_text}, {"out", a.out}});
    std::cout << "evaluated " << outcomes.size() << " participants -> " << a.out << "/metrics.txt\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"motion sickness prediction from head-mounted IMU and camera data"};
    app.set_version_flag("--version", "svcvv 1.0.0");
    app.require_subcommand(1);

    VvArgs vv_args;
    CLI::App* vv_cmd = app.add_subcommand("vv", "estimate the visual vertical from camera frames");
    vv_cmd->add_option("--frames", vv_args.frames, "frame directory with index.txt")->required();
    vv_cmd->add_option("--out", vv_args.out, "output directory")->required();
    vv_cmd->add_option("--crop", vv_args.crop_text, "center crop WIDTHxHEIGHT (default: full frame)");
    vv_cmd->add_option("--theta0", vv_args.theta0, "initial angle estimate, degrees");
    vv_cmd->add_option("--jobs", vv_args.jobs, "worker threads (0 = all cores)");
    vv_cmd->add_flag("--lenient", vv_args.lenient, "relax input validation");
    vv_cmd->add_option("--config", vv_args.config, "key=value file overriding these flags");

    PredictArgs pr_args;
    CLI::App* pr_cmd = app.add_subcommand("predict", "simulate a trial and predict motion sickness incidence");
    pr_cmd->add_option("--imu", pr_args.imu, "IMU csv (t,fx,fy,fz,wx,wy,wz)")->required();
    pr_cmd->add_option("--frames", pr_args.frames, "frame directory (visual vertical from video)");
    pr_cmd->add_option("--vv", pr_args.vv, "precomputed visual vertical csv")->excludes("--frames");
    pr_cmd->add_option("--params", pr_args.params, "parameter file (default: preset for the variant)");
    pr_cmd->add_option("--variant", pr_args.variant_text, "model variant: svc or svc-vv")->required();
    pr_cmd->add_option("--out", pr_args.out, "output directory")->required();
    pr_cmd->add_option("--crop", pr_args.crop_text, "center crop WIDTHxHEIGHT for frames");
    pr_cmd->add_option("--rate", pr_args.rate, "nominal IMU rate, Hz");
    pr_cmd->add_option("--theta0", pr_args.theta0, "initial visual angle, degrees");
    pr_cmd->add_option("--filter-alpha", pr_args.filter_alpha, "attitude filter smoothing weight");
    pr_cmd->add_option("--ghat-init", pr_args.ghat_text, "gravity expectation start: measured or zero");
    pr_cmd->add_option("--jobs", pr_args.jobs, "worker threads (0 = all cores)");
    pr_cmd->add_flag("--lenient", pr_args.lenient, "relax input validation");
    pr_cmd->add_option("--config", pr_args.config, "key=value file overriding these flags");

    SynthArgs sy_args;
    CLI::App* sy_cmd = app.add_subcommand("synth", "generate a synthetic slalom trial and test scenes");
    sy_cmd->add_option("--spec", sy_args.spec, "synthesis spec file")->required();
    sy_cmd->add_option("--out", sy_args.out, "output directory")->required();
    auto* seed_opt = sy_cmd->add_option("--seed", sy_args.seed, "noise seed (replaces the value from --spec)");
    sy_cmd->add_option("--jobs", sy_args.jobs, "worker threads for frame rendering (0 = all cores)");
    sy_cmd->add_option("--config", sy_args.config, "key=value file overriding these flags");

    EvalArgs ev_args;
    CLI::App* ev_cmd = app.add_subcommand("eval", "score predictions against observed cohort outcomes");
    ev_cmd->add_option("--summaries", ev_args.summaries, "cohort summary csv")->required();
    ev_cmd->add_option("--measure", ev_args.measure_text, "comparison measure: mean or max");
    ev_cmd->add_option("--out", ev_args.out, "output directory")->required();
    ev_cmd->add_option("--config", ev_args.config, "key=value file overriding these flags");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        sy_args.seed_set = seed_opt->count() > 0;
        if (vv_cmd->parsed())
            run_vv(vv_args);
        else if (pr_cmd->parsed())
            run_predict(pr_args);
        else if (sy_cmd->parsed())
            run_synth(sy_args);
        else if (ev_cmd->parsed())
            run_eval(ev_args);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
