#pragma once

#include <array>
#include <vector>

#include "svcvv/image.hpp"
#include "svcvv/timeseries.hpp"
#include "svcvv/vec3.hpp"

namespace svcvv {

/// Per-pixel Sobel responses over a normalized gray frame.
///
/// `magnitude` is min/max renormalized to [0, 1] over the frame (all zeros
/// when the frame has a single magnitude value, which then contributes no
/// histogram mass). `angle_deg` is the gradient orientation folded to
/// [0, 180): orientation is a line-like quantity, opposite gradient signs
/// describe the same edge. Vertical structure produces angles near 90.
struct GradientField {
    int width = 0;
    int height = 0;
    std::vector<float> gx;
    std::vector<float> gy;
    std::vector<float> magnitude;
    std::vector<float> angle_deg;
};

/// Edge mass per integer degree, bins 0..179.
using AngleHistogram = std::array<double, 180>;

/// Fold an angle in degrees onto [0, 180), identifying opposite directions.
inline double fold_half_turn(double deg) {
    double d = deg;
    if (d < 0.0) d += 360.0;
    if (d >= 360.0) d -= 360.0;
    if (d >= 180.0) d -= 180.0;
    return d;
}

/// Rec.601 luma (0.299, 0.587, 0.114) followed by global min/max
/// normalization to [0, 1]. A constant frame cannot be normalized; it comes
/// back flagged `no_contrast` and the caller holds its previous estimate.
GrayImage to_gray_normalized(const ColorImage& img);

/// 3x3 Sobel pair with replicate border padding, gradient magnitude and the
/// folded orientation angle. The angle convention measures from the frame's
/// upward axis: atan2(gx, gy) with gy the downward (row-increasing) response,
/// which lands vertical edges at 90 and horizontal edges at 0.
GradientField sobel_gradients(const GrayImage& gray);

/// Accumulate normalized magnitude into integer-degree orientation bins.
/// Total histogram mass equals the total normalized magnitude.
AngleHistogram weighted_angle_histogram(const GradientField& field);

/// Dominant-orientation extraction with temporal smoothing:
///
///   1. consider bins 30..150 (helmet-mounted views never tip the vertical
///      out of this window),
///   2. take the three largest bins (ties prefer the larger angle),
///   3. magnitude-weighted average of their center angles,
///   4. blend with the previous frame: 0.7/0.3 for steps up to 4 degrees,
///      0.2/0.8 for larger jumps, which suppresses single-frame spikes.
///
/// When the candidate window holds no mass the previous estimate is kept.
/// theta_prev must lie in [30, 150]; the result then stays in [30, 150].
double compute_theta_vv(const AngleHistogram& hist, double theta_prev);

/// Embed the frontal-plane angle as a vector scaled to standard gravity:
/// (9.81 cos, 9.81 sin, 0). The optical-axis component is zero by
/// construction: a single view constrains the vertical only in-plane.
Vec3 theta_to_vv(double theta_deg);

/// Visual transfer is unity: the sensed visual vertical equals the estimate.
inline Vec3 sense_vv(const Vec3& vv) { return vv; }

struct VvEstimate {
    double t = 0.0;
    double theta_deg = 90.0;
    Vec3 vv;
    bool held = false;  // frame had no usable contrast; previous estimate kept
};

/// Frame-local part of the estimate: everything up to the histogram. Pure
/// function of the frame, so batches can be analyzed on worker threads while
/// the temporal smoothing stays a sequential fold.
struct FrameAnalysis {
    AngleHistogram hist{};
    bool no_contrast = false;
};

FrameAnalysis analyze_frame(const ColorImage& frame);

/// Stateful per-trial chain: gray -> gradients -> histogram -> smoothed
/// angle. The estimate starts upright (90 degrees).
class VvEstimator {
public:
    explicit VvEstimator(double theta0_deg = 90.0);
    VvEstimate process(const ColorImage& frame, double t);
    VvEstimate advance(const FrameAnalysis& analysis, double t);
    double theta() const { return theta_prev_; }

private:
    double theta_prev_;
};

/// Hold each sample until the next one: for every target time take the most
/// recent sample at or before it. Target times must not precede the first
/// sample ("no sample to hold") and must not run more than one sample period
/// past the last one.
TimeSeries<Vec3> zoh_resample(const TimeSeries<Vec3>& series, const std::vector<double>& target_t);

}  // namespace svcvv
