#include "svcvv/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "svcvv/errors.hpp"
#include "svcvv/image.hpp"
#include "svcvv/text.hpp"

namespace svcvv {
namespace {

constexpr const char* kImuHeader = "t,fx,fy,fz,wx,wy,wz";
constexpr const char* kVvHeader = "t,theta_vv_deg,vv_x,vv_y,vv_z,quality_flag";

std::string at_line(const std::string& path, std::size_t line) {
    return path + ":" + std::to_string(line);
}

}  // namespace

ImuSeries load_imu(const std::string& path, double nominal_rate_hz, bool strict) {
    if (nominal_rate_hz <= 0.0) throw InputError("load_imu: nominal rate must be positive");
    const double period = 1.0 / nominal_rate_hz;
    const auto lines = read_lines(path);
    if (lines.empty() || trim(lines[0]) != kImuHeader)
        throw InputError(path + ":1: expected header '" + std::string(kImuHeader) + "'");

    struct Raw {
        double t;
        ImuSample s;
        std::size_t line;
    };
    std::vector<Raw> raw;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        const auto fields = split(lines[i], ',');
        if (fields.size() != 7)
            throw InputError(at_line(path, i + 1) + ": expected 7 fields, got " +
                             std::to_string(fields.size()));
        Raw r;
        r.line = i + 1;
        r.t = parse_double(fields[0], at_line(path, i + 1));
        r.s.f = {parse_double(fields[1], at_line(path, i + 1)),
                 parse_double(fields[2], at_line(path, i + 1)),
                 parse_double(fields[3], at_line(path, i + 1))};
        r.s.omega = {parse_double(fields[4], at_line(path, i + 1)),
                     parse_double(fields[5], at_line(path, i + 1)),
                     parse_double(fields[6], at_line(path, i + 1))};
        raw.push_back(r);
    }

    ImuSeries out;
    if (raw.empty()) return out;

    const double t0 = raw[0].t;
    long prev_slot = -1;
    std::vector<std::pair<long, ImuSample>> slotted;
    slotted.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const Raw& r = raw[i];
        if (i > 0) {
            if (!(r.t > raw[i - 1].t)) {
                if (r.t == raw[i - 1].t)
                    throw InputError(at_line(path, r.line) + ": duplicated timestamp");
                throw InputError(at_line(path, r.line) + ": timestamps not increasing");
            }
            if (r.t - raw[i - 1].t > 2.0 * period * (1.0 + 1e-9))
                throw InputError(at_line(path, r.line) + ": gap exceeds tolerance (" +
                                 fmt_g(r.t - raw[i - 1].t) + " s > 2 periods)");
        }
        const long slot = std::lround((r.t - t0) / period);
        const double jitter = std::abs(r.t - (t0 + static_cast<double>(slot) * period));
        if (jitter > 0.1 * period && strict)
            throw InputError(at_line(path, r.line) + ": timestamp jitter exceeds tolerance (" +
                             fmt_g(jitter) + " s)");
        if (slot <= prev_slot)
            throw InputError(at_line(path, r.line) + ": timestamp jitter exceeds tolerance");
        prev_slot = slot;
        slotted.emplace_back(slot, r.s);
    }

    // Snap onto the uniform grid; a dropped sample leaves a slot filled by
    // holding the previous reading.
    std::size_t src = 0;
    for (long k = 0; k <= slotted.back().first; ++k) {
        if (src + 1 < slotted.size() && slotted[src + 1].first <= k) ++src;
        out.push_back(t0 + static_cast<double>(k) * period, slotted[src].second);
    }
    out.validate();
    return out;
}

void save_imu(const std::string& path, const ImuSeries& imu) {
    std::ofstream o(path);
    if (!o) throw InputError("cannot write file: " + path);
    o << kImuHeader << "\n";
    for (std::size_t i = 0; i < imu.size(); ++i) {
        const ImuSample& s = imu.v[i];
        o << fmt_full(imu.t[i]) << ',' << fmt_full(s.f.x) << ',' << fmt_full(s.f.y) << ','
          << fmt_full(s.f.z) << ',' << fmt_full(s.omega.x) << ',' << fmt_full(s.omega.y) << ','
          << fmt_full(s.omega.z) << "\n";
    }
    if (!o) throw InputError("short write: " + path);
}

std::vector<FrameRef> load_frames(const std::string& dir, bool strict) {
    namespace fs = std::filesystem;
    const fs::path index = fs::path(dir) / "index.txt";
    if (!fs::exists(index)) throw InputError("frame index not found: " + index.string());

    std::vector<FrameRef> frames;
    const auto lines = read_lines(index.string());
    int ref_w = 0, ref_h = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty() || line[0] == '#') continue;
        const std::size_t sp = line.find_first_of(" \t");
        if (sp == std::string::npos)
            throw InputError(at_line(index.string(), i + 1) +
                             ": expected '<frame number> <timestamp>'");
        const long num = parse_long(line.substr(0, sp), at_line(index.string(), i + 1));
        const double t = parse_double(line.substr(sp + 1), at_line(index.string(), i + 1));
        if (num < 0)
            throw InputError(at_line(index.string(), i + 1) + ": negative frame number");

        char name[32];
        std::snprintf(name, sizeof name, "frame_%06ld.ppm", num);
        FrameRef ref;
        ref.t = t;
        ref.path = (fs::path(dir) / name).string();
        if (!fs::exists(ref.path))
            throw InputError(at_line(index.string(), i + 1) + ": missing frame file " + ref.path);
        probe_ppm(ref.path, ref.width, ref.height);
        if (frames.empty()) {
            ref_w = ref.width;
            ref_h = ref.height;
        } else {
            if (!(t > frames.back().t))
                throw InputError(at_line(index.string(), i + 1) +
                                 ": frame timestamps not increasing");
            if (strict && (ref.width != ref_w || ref.height != ref_h))
                throw InputError(at_line(index.string(), i + 1) + ": frame dimensions " +
                                 std::to_string(ref.width) + "x" + std::to_string(ref.height) +
                                 " differ from " + std::to_string(ref_w) + "x" +
                                 std::to_string(ref_h));
        }
        frames.push_back(std::move(ref));
    }
    return frames;
}

SyncResult synchronize(const ImuSeries& imu, const std::vector<FrameRef>& frames) {
    imu.validate();
    if (imu.empty() || frames.empty())
        throw InputError("synchronize: empty IMU or frame track");
    double frame_period = 0.0;
    if (frames.size() >= 2) frame_period = frames.back().t - frames[frames.size() - 2].t;

    const double lo = std::max(imu.t.front(), frames.front().t);
    const double hi = std::min(imu.t.back(), frames.back().t + frame_period);
    if (lo > hi) throw InputError("synchronize: no temporal overlap between IMU and frames");

    SyncResult out;
    for (std::size_t i = 0; i < imu.size(); ++i)
        if (imu.t[i] >= lo - 1e-12 && imu.t[i] <= hi + 1e-12)
            out.imu.push_back(imu.t[i], imu.v[i]);

    // Keep the frame holding at the window start plus everything inside.
    std::size_t first = 0;
    for (std::size_t i = 0; i < frames.size(); ++i)
        if (frames[i].t <= lo) first = i;
    for (std::size_t i = first; i < frames.size() && frames[i].t <= hi; ++i)
        out.frames.push_back(frames[i]);

    if (out.imu.size() < 2)
        throw InputError("synchronize: overlap too short to simulate");
    return out;
}

VvRecord load_vv(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty() || trim(lines[0]) != kVvHeader)
        throw InputError(path + ":1: expected header '" + std::string(kVvHeader) + "'");
    VvRecord rec;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        const auto fields = split(lines[i], ',');
        if (fields.size() != 6)
            throw InputError(at_line(path, i + 1) + ": expected 6 fields, got " +
                             std::to_string(fields.size()));
        const std::string ctx = at_line(path, i + 1);
        const double t = parse_double(fields[0], ctx);
        rec.theta_deg.push_back(parse_double(fields[1], ctx));
        rec.vv.push_back(t, Vec3{parse_double(fields[2], ctx), parse_double(fields[3], ctx),
                                 parse_double(fields[4], ctx)});
        rec.quality.push_back(static_cast<int>(parse_long(fields[5], ctx)));
    }
    rec.vv.validate();
    return rec;
}

void save_vv(const std::string& path, const VvRecord& rec) {
    std::ofstream o(path);
    if (!o) throw InputError("cannot write file: " + path);
    o << kVvHeader << "\n";
    for (std::size_t i = 0; i < rec.vv.size(); ++i) {
        o << fmt_full(rec.vv.t[i]) << ',' << fmt_full(rec.theta_deg[i]) << ','
          << fmt_full(rec.vv.v[i].x) << ',' << fmt_full(rec.vv.v[i].y) << ','
          << fmt_full(rec.vv.v[i].z) << ',' << rec.quality[i] << "\n";
    }
    if (!o) throw InputError("short write: " + path);
}

}  // namespace svcvv
