#pragma once

#include <string>
#include <vector>

#include "svcvv/timeseries.hpp"
#include "svcvv/vec3.hpp"

namespace svcvv {

/// One accelerometer + gyro reading; timestamps live in the enclosing series.
struct ImuSample {
    Vec3 f;      // specific force (GIA), m/s^2, head frame
    Vec3 omega;  // angular velocity, rad/s, head frame
};

using ImuSeries = TimeSeries<ImuSample>;

/// Reads a delimited IMU log with header `t,fx,fy,fz,wx,wy,wz` (SI units)
/// and snaps it onto the uniform nominal grid.
///
/// Validation, all errors carrying the line number:
///  - timestamps must be strictly increasing,
///  - a gap of more than two nominal periods is rejected ("gap exceeds
///    tolerance"); a single dropped sample is tolerated and filled by ZOH,
///  - deviation from the grid beyond 10% of the period is rejected under
///    strict mode and accepted verbatim under lenient mode.
ImuSeries load_imu(const std::string& path, double nominal_rate_hz = 100.0, bool strict = true);

/// Full-precision writer; loading the result reproduces the series exactly.
void save_imu(const std::string& path, const ImuSeries& imu);

/// A frame on disk plus its capture time.
struct FrameRef {
    double t = 0.0;
    std::string path;
    int width = 0;
    int height = 0;
};

/// Reads DIR/index.txt (lines `<frame number> <timestamp seconds>`) and
/// resolves each number to DIR/frame_NNNNNN.ppm. Every referenced file must
/// exist; under strict mode every frame must match the first frame's
/// dimensions. A missing index file reports "frame index not found".
std::vector<FrameRef> load_frames(const std::string& dir, bool strict = true);

struct SyncResult {
    ImuSeries imu;
    std::vector<FrameRef> frames;
};

/// Clip both tracks to their common time window. Frame times are usable one
/// frame period past the last frame (hold); the frame immediately before the
/// window start is kept so a hold value exists at the first IMU sample.
SyncResult synchronize(const ImuSeries& imu, const std::vector<FrameRef>& frames);

/// Visual-vertical series file: header
/// `t,theta_vv_deg,vv_x,vv_y,vv_z,quality_flag` (flag 1 = estimate held on a
/// contrast-free frame).
struct VvRecord {
    TimeSeries<Vec3> vv;
    std::vector<double> theta_deg;
    std::vector<int> quality;
};

VvRecord load_vv(const std::string& path);
void save_vv(const std::string& path, const VvRecord& rec);

}  // namespace svcvv
