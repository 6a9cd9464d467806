#include "svcvv/vvp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "svcvv/errors.hpp"
#include "svcvv/internal_model.hpp"

namespace svcvv {

GrayImage to_gray_normalized(const ColorImage& img) {
    if (img.width <= 0 || img.height <= 0)
        throw InputError("to_gray_normalized: empty image");
    GrayImage out;
    out.width = img.width;
    out.height = img.height;
    out.v.resize(static_cast<std::size_t>(img.width) * img.height);
    float lo = std::numeric_limits<float>::max();
    float hi = std::numeric_limits<float>::lowest();
    const std::uint8_t* p = img.rgb.data();
    for (std::size_t i = 0; i < out.v.size(); ++i, p += 3) {
        const float luma = 0.299f * p[0] + 0.587f * p[1] + 0.114f * p[2];
        out.v[i] = luma;
        lo = std::min(lo, luma);
        hi = std::max(hi, luma);
    }
    if (hi == lo) {
        std::fill(out.v.begin(), out.v.end(), 0.0f);
        out.no_contrast = true;
        return out;
    }
    const float scale = 1.0f / (hi - lo);
    for (float& v : out.v) v = (v - lo) * scale;
    return out;
}

GradientField sobel_gradients(const GrayImage& gray) {
    const int w = gray.width, h = gray.height;
    GradientField f;
    f.width = w;
    f.height = h;
    const std::size_t n = static_cast<std::size_t>(w) * h;
    f.gx.resize(n);
    f.gy.resize(n);
    f.magnitude.resize(n);
    f.angle_deg.resize(n);

    constexpr float kRadToDeg = static_cast<float>(180.0 / std::numbers::pi);
    float mlo = std::numeric_limits<float>::max();
    float mhi = std::numeric_limits<float>::lowest();
    auto clampi = [](int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); };
    for (int r = 0; r < h; ++r) {
        const int rm = clampi(r - 1, 0, h - 1), rp = clampi(r + 1, 0, h - 1);
        const float* row0 = gray.v.data() + static_cast<std::size_t>(rm) * w;
        const float* row1 = gray.v.data() + static_cast<std::size_t>(r) * w;
        const float* row2 = gray.v.data() + static_cast<std::size_t>(rp) * w;
        for (int c = 0; c < w; ++c) {
            const int cm = clampi(c - 1, 0, w - 1), cp = clampi(c + 1, 0, w - 1);
            const float a = row0[cm], b = row0[c], d = row0[cp];
            const float e = row1[cm], g = row1[cp];
            const float i = row2[cm], j = row2[c], k = row2[cp];
            const float gx = (d + 2.0f * g + k) - (a + 2.0f * e + i);
            const float gy = (i + 2.0f * j + k) - (a + 2.0f * b + d);
            const float mag = std::sqrt(gx * gx + gy * gy);
            float ang = 0.0f;
            if (mag > 0.0f) {
                ang = std::atan2(gx, gy) * kRadToDeg;  // 0 from vertical gradient, 90 from horizontal
                if (ang < 0.0f) ang += 180.0f;
                if (ang >= 180.0f) ang -= 180.0f;
            }
            const std::size_t idx = static_cast<std::size_t>(r) * w + c;
            f.gx[idx] = gx;
            f.gy[idx] = gy;
            f.magnitude[idx] = mag;
            f.angle_deg[idx] = ang;
            mlo = std::min(mlo, mag);
            mhi = std::max(mhi, mag);
        }
    }
    if (mhi > mlo) {
        const float scale = 1.0f / (mhi - mlo);
        for (float& m : f.magnitude) m = (m - mlo) * scale;
    } else {
        std::fill(f.magnitude.begin(), f.magnitude.end(), 0.0f);
    }
    return f;
}

AngleHistogram weighted_angle_histogram(const GradientField& field) {
    AngleHistogram hist{};
    const std::size_t n = field.angle_deg.size();
    for (std::size_t i = 0; i < n; ++i) {
        int bin = static_cast<int>(field.angle_deg[i]);
        if (bin > 179) bin = 179;  // guards float rounding at the fold seam
        hist[bin] += field.magnitude[i];
    }
    return hist;
}

double compute_theta_vv(const AngleHistogram& hist, double theta_prev) {
    if (theta_prev < 30.0 || theta_prev > 150.0)
        throw std::domain_error("compute_theta_vv: previous angle outside [30, 150]");

    struct Bin {
        double count;
        int angle;
    };
    std::array<Bin, 121> window;
    for (int a = 30; a <= 150; ++a) window[a - 30] = {hist[a], a};
    // Ascending by mass; equal mass prefers the larger angle. The top three
    // end up in the last three slots.
    std::sort(window.begin(), window.end(), [](const Bin& l, const Bin& r) {
        if (l.count != r.count) return l.count < r.count;
        return l.angle < r.angle;
    });

    double mass = 0.0, weighted = 0.0;
    for (std::size_t i = window.size() - 3; i < window.size(); ++i) {
        mass += window[i].count;
        weighted += window[i].count * window[i].angle;
    }
    if (mass == 0.0) return theta_prev;

    const double raw = weighted / mass;
    if (std::abs(raw - theta_prev) <= 4.0)
        return 0.7 * raw + 0.3 * theta_prev;
    return 0.2 * raw + 0.8 * theta_prev;
}

Vec3 theta_to_vv(double theta_deg) {
    const double rad = theta_deg * std::numbers::pi / 180.0;
    return {kGravity * std::cos(rad), kGravity * std::sin(rad), 0.0};
}

VvEstimator::VvEstimator(double theta0_deg) : theta_prev_(theta0_deg) {
    if (theta0_deg < 30.0 || theta0_deg > 150.0)
        throw std::domain_error("VvEstimator: initial angle outside [30, 150]");
}

FrameAnalysis analyze_frame(const ColorImage& frame) {
    FrameAnalysis a;
    const GrayImage gray = to_gray_normalized(frame);
    if (gray.no_contrast) {
        a.no_contrast = true;
        return a;
    }
    const GradientField field = sobel_gradients(gray);
    a.hist = weighted_angle_histogram(field);
    return a;
}

VvEstimate VvEstimator::process(const ColorImage& frame, double t) { return advance(analyze_frame(frame), t); }

VvEstimate VvEstimator::advance(const FrameAnalysis& analysis, double t) {
    VvEstimate est;
    est.t = t;
    if (analysis.no_contrast) {
        est.theta_deg = theta_prev_;
        est.vv = theta_to_vv(theta_prev_);
        est.held = true;
        return est;
    }
    theta_prev_ = compute_theta_vv(analysis.hist, theta_prev_);
    est.theta_deg = theta_prev_;
    est.vv = theta_to_vv(theta_prev_);
    return est;
}

TimeSeries<Vec3> zoh_resample(const TimeSeries<Vec3>& series, const std::vector<double>& target_t) {
    if (series.empty()) throw InputError("zoh_resample: empty source series");
    double period = 0.0;
    if (series.size() >= 2) period = series.t.back() - series.t[series.size() - 2];
    const double t_max = series.t.back() + period;

    TimeSeries<Vec3> out;
    out.t.reserve(target_t.size());
    out.v.reserve(target_t.size());
    for (const double t : target_t) {
        if (t < series.t.front())
            throw InputError("zoh_resample: no sample to hold before t=" + std::to_string(t));
        if (t > t_max + 1e-12)
            throw InputError("zoh_resample: target beyond hold range at t=" + std::to_string(t));
        // Most recent sample at or before t.
        const auto it = std::upper_bound(series.t.begin(), series.t.end(), t);
        const std::size_t i = static_cast<std::size_t>(it - series.t.begin()) - 1;
        out.push_back(t, series.v[i]);
    }
    return out;
}

}  // namespace svcvv
