#include "svcvv/plot.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <vector>

#include "svcvv/errors.hpp"

namespace svcvv {

namespace {

// 5x7 column-major glyphs, bit 0 = top row.
struct Glyph {
    char ch;
    std::uint8_t col[5];
};

constexpr Glyph kFont[] = {
    {' ', {0x00, 0x00, 0x00, 0x00, 0x00}}, {'%', {0x23, 0x13, 0x08, 0x64, 0x62}},
    {'(', {0x00, 0x1C, 0x22, 0x41, 0x00}}, {')', {0x00, 0x41, 0x22, 0x1C, 0x00}},
    {'+', {0x08, 0x08, 0x3E, 0x08, 0x08}}, {'-', {0x08, 0x08, 0x08, 0x08, 0x08}},
    {'.', {0x00, 0x60, 0x60, 0x00, 0x00}}, {'/', {0x20, 0x10, 0x08, 0x04, 0x02}},
    {'0', {0x3E, 0x51, 0x49, 0x45, 0x3E}}, {'1', {0x00, 0x42, 0x7F, 0x40, 0x00}},
    {'2', {0x42, 0x61, 0x51, 0x49, 0x46}}, {'3', {0x21, 0x41, 0x45, 0x4B, 0x31}},
    {'4', {0x18, 0x14, 0x12, 0x7F, 0x10}}, {'5', {0x27, 0x45, 0x45, 0x45, 0x39}},
    {'6', {0x3C, 0x4A, 0x49, 0x49, 0x30}}, {'7', {0x01, 0x71, 0x09, 0x05, 0x03}},
    {'8', {0x36, 0x49, 0x49, 0x49, 0x36}}, {'9', {0x06, 0x49, 0x49, 0x29, 0x1E}},
    {':', {0x00, 0x36, 0x36, 0x00, 0x00}}, {'=', {0x14, 0x14, 0x14, 0x14, 0x14}},
    {'[', {0x00, 0x7F, 0x41, 0x41, 0x00}}, {']', {0x00, 0x41, 0x41, 0x7F, 0x00}},
    {'_', {0x40, 0x40, 0x40, 0x40, 0x40}}, {'A', {0x7E, 0x11, 0x11, 0x11, 0x7E}},
    {'B', {0x7F, 0x49, 0x49, 0x49, 0x36}}, {'C', {0x3E, 0x41, 0x41, 0x41, 0x22}},
    {'D', {0x7F, 0x41, 0x41, 0x22, 0x1C}}, {'E', {0x7F, 0x49, 0x49, 0x49, 0x41}},
    {'F', {0x7F, 0x09, 0x09, 0x09, 0x01}}, {'G', {0x3E, 0x41, 0x49, 0x49, 0x7A}},
    {'H', {0x7F, 0x08, 0x08, 0x08, 0x7F}}, {'I', {0x00, 0x41, 0x7F, 0x41, 0x00}},
    {'J', {0x20, 0x40, 0x41, 0x3F, 0x01}}, {'K', {0x7F, 0x08, 0x14, 0x22, 0x41}},
    {'L', {0x7F, 0x40, 0x40, 0x40, 0x40}}, {'M', {0x7F, 0x02, 0x0C, 0x02, 0x7F}},
    {'N', {0x7F, 0x04, 0x08, 0x10, 0x7F}}, {'O', {0x3E, 0x41, 0x41, 0x41, 0x3E}},
    {'P', {0x7F, 0x09, 0x09, 0x09, 0x06}}, {'Q', {0x3E, 0x41, 0x51, 0x21, 0x5E}},
    {'R', {0x7F, 0x09, 0x19, 0x29, 0x46}}, {'S', {0x46, 0x49, 0x49, 0x49, 0x31}},
    {'T', {0x01, 0x01, 0x7F, 0x01, 0x01}}, {'U', {0x3F, 0x40, 0x40, 0x40, 0x3F}},
    {'V', {0x1F, 0x20, 0x40, 0x20, 0x1F}}, {'W', {0x3F, 0x40, 0x38, 0x40, 0x3F}},
    {'X', {0x63, 0x14, 0x08, 0x14, 0x63}}, {'Y', {0x07, 0x08, 0x70, 0x08, 0x07}},
    {'Z', {0x61, 0x51, 0x49, 0x45, 0x43}},
};

const std::uint8_t* glyph_for(char ch) {
    const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    for (const auto& g : kFont)
        if (g.ch == up) return g.col;
    return nullptr;
}

constexpr Rgb kInk{30, 30, 30};
constexpr Rgb kGrid{210, 210, 214};
constexpr Rgb kSeries{31, 98, 190};
constexpr Rgb kBar{31, 98, 190};
constexpr Rgb kMissing{185, 185, 185};
constexpr Rgb kPaper{255, 255, 255};

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

}  // namespace

Canvas::Canvas(int width, int height, Rgb background) {
    img_.width = width;
    img_.height = height;
    img_.rgb.assign(static_cast<std::size_t>(width) * height * 3, 0);
    fill_rect(0, 0, width, height, background);
}

void Canvas::set(int x, int y, Rgb c) {
    if (x < 0 || y < 0 || x >= img_.width || y >= img_.height) return;
    const std::size_t at = 3 * (static_cast<std::size_t>(y) * img_.width + x);
    img_.rgb[at] = c.r;
    img_.rgb[at + 1] = c.g;
    img_.rgb[at + 2] = c.b;
}

void Canvas::fill_rect(int x, int y, int w, int h, Rgb c) {
    for (int j = y; j < y + h; ++j)
        for (int i = x; i < x + w; ++i) set(i, j, c);
}

void Canvas::line(int x0, int y0, int x1, int y1, Rgb c) {
    const int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
    const int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    while (true) {
        set(x0, y0, c);
        if (x0 == x1 && y0 == y1) break;
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x0 += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y0 += sy;
        }
    }
}

void Canvas::text(int x, int y, const std::string& s, Rgb c, int scale) {
    int cx = x;
    for (char ch : s) {
        const std::uint8_t* cols = glyph_for(ch);
        if (cols != nullptr) {
            for (int col = 0; col < 5; ++col)
                for (int row = 0; row < 7; ++row)
                    if (cols[col] >> row & 1) fill_rect(cx + col * scale, y + row * scale, scale, scale, c);
        }
        cx += 6 * scale;
    }
}

int Canvas::text_width(const std::string& s, int scale) {
    return s.empty() ? 0 : (static_cast<int>(s.size()) * 6 - 1) * scale;
}

int Canvas::text_height(int scale) { return 7 * scale; }

void plot_line_chart(const std::string& path, const std::string& title, const std::string& x_label,
                     const std::string& y_label, std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw InputError("plot: series lengths differ");
    if (xs.empty()) throw InputError("plot: empty series");

    const int width = 900, height = 480;
    const int left = 70, right = 25, top = 40, bottom = 50;
    const int px = left, py = top, pw = width - left - right, ph = height - top - bottom;

    double x_lo = xs[0], x_hi = xs[0], y_lo = ys[0], y_hi = ys[0];
    for (std::size_t i = 0; i < xs.size(); ++i) {
        x_lo = std::min(x_lo, xs[i]);
        x_hi = std::max(x_hi, xs[i]);
        if (std::isfinite(ys[i])) {
            y_lo = std::min(y_lo, ys[i]);
            y_hi = std::max(y_hi, ys[i]);
        }
    }
    if (!std::isfinite(y_lo) || !std::isfinite(y_hi)) {
        y_lo = 0.0;
        y_hi = 1.0;
    }
    if (x_hi == x_lo) x_hi = x_lo + 1.0;
    if (y_hi == y_lo) y_hi = y_lo + 1.0;
    const double y_pad = 0.05 * (y_hi - y_lo);
    y_lo -= y_pad;
    y_hi += y_pad;

    Canvas cv(width, height, kPaper);
    const auto to_px = [&](double x) { return px + static_cast<int>(std::lround((x - x_lo) / (x_hi - x_lo) * (pw - 1))); };
    const auto to_py = [&](double y) {
        return py + ph - 1 - static_cast<int>(std::lround((y - y_lo) / (y_hi - y_lo) * (ph - 1)));
    };

    const int n_ticks = 5;
    for (int i = 0; i <= n_ticks; ++i) {
        const double fx = x_lo + (x_hi - x_lo) * i / n_ticks;
        const double fy = y_lo + (y_hi - y_lo) * i / n_ticks;
        cv.line(to_px(fx), py, to_px(fx), py + ph - 1, kGrid);
        cv.line(px, to_py(fy), px + pw - 1, to_py(fy), kGrid);
        const std::string xs_label = fmt_tick(fx);
        cv.text(to_px(fx) - Canvas::text_width(xs_label) / 2, py + ph + 6, xs_label, kInk);
        const std::string ys_label = fmt_tick(fy);
        cv.text(px - Canvas::text_width(ys_label) - 6, to_py(fy) - 3, ys_label, kInk);
    }
    cv.line(px, py, px, py + ph - 1, kInk);
    cv.line(px, py + ph - 1, px + pw - 1, py + ph - 1, kInk);

    // One vertical min-max sliver per pixel column keeps narrow peaks visible
    // even when many samples share a column.
    std::vector<double> col_min(static_cast<std::size_t>(pw), std::numeric_limits<double>::infinity());
    std::vector<double> col_max(static_cast<std::size_t>(pw), -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(ys[i])) continue;
        const int c = std::clamp(to_px(xs[i]) - px, 0, pw - 1);
        col_min[c] = std::min(col_min[c], ys[i]);
        col_max[c] = std::max(col_max[c], ys[i]);
    }
    int prev_c = -1, prev_y = 0;
    for (int c = 0; c < pw; ++c) {
        if (col_min[c] > col_max[c]) continue;
        const int y0 = to_py(col_max[c]);
        const int y1 = to_py(col_min[c]);
        cv.line(px + c, y0, px + c, y1, kSeries);
        const int yc = (y0 + y1) / 2;
        if (prev_c >= 0 && c - prev_c > 1) cv.line(px + prev_c, prev_y, px + c, yc, kSeries);
        prev_c = c;
        prev_y = yc;
    }

    cv.text((width - Canvas::text_width(title, 2)) / 2, 12, title, kInk, 2);
    cv.text(px + (pw - Canvas::text_width(x_label)) / 2, height - 16, x_label, kInk);
    cv.text(8, py - 18, y_label, kInk);
    write_ppm(path, cv.image());
}

void plot_eval_report(const std::string& path, const ConfusionMatrix& cm, const MetricReport& mr,
                      const std::string& subtitle) {
    const int width = 680, height = 420;
    Canvas cv(width, height, kPaper);
    cv.text((width - Canvas::text_width("model vs observed ranking", 2)) / 2, 12, "model vs observed ranking", kInk, 2);
    cv.text((width - Canvas::text_width(subtitle)) / 2, 34, subtitle, kInk);

    // Left panel: confusion counts.
    const int gx = 60, gy = 110, cell = 110;
    const char* names[4] = {"TP", "FP", "FN", "TN"};
    const int counts[4] = {cm.tp, cm.fp, cm.fn, cm.tn};
    cv.text(gx + cell - Canvas::text_width("PREDICTED LAD<WAD") / 2, gy - 40, "PREDICTED LAD<WAD", kInk);
    cv.text(gx - 10, gy + 2 * cell + 14, "ROWS: OBSERVED YES/NO", kInk);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            const int i = r * 2 + c;  // TP FP / FN TN
            const int x = gx + c * cell, y = gy + r * cell;
            cv.fill_rect(x, y, cell - 4, cell - 4, Rgb{235, 240, 248});
            cv.text(x + 8, y + 8, names[i], kInk);
            const std::string num = std::to_string(counts[i]);
            cv.text(x + (cell - 4 - Canvas::text_width(num, 3)) / 2, y + (cell - 4 - Canvas::text_height(3)) / 2 + 4,
                    num, kSeries, 3);
        }
    }

    // Right panel: metric bars on a 0..1 scale.
    const int bx = 360, by = 80, bw = 260, bh = 240;
    cv.line(bx, by, bx, by + bh, kInk);
    cv.line(bx, by + bh, bx + bw, by + bh, kInk);
    for (int i = 0; i <= 4; ++i) {
        const double v = i / 4.0;
        const int y = by + bh - static_cast<int>(std::lround(v * bh));
        cv.line(bx - 3, y, bx, y, kInk);
        cv.text(bx - 3 - Canvas::text_width(fmt_tick(v)) - 3, y - 3, fmt_tick(v), kInk);
    }
    const char* metric_names[4] = {"ACC", "PRE", "REC", "F1"};
    const std::optional<double> values[4] = {mr.accuracy, mr.precision, mr.recall, mr.f1};
    const int slot = bw / 4;
    for (int i = 0; i < 4; ++i) {
        const int x = bx + i * slot + slot / 4;
        const int w = slot / 2;
        if (values[i]) {
            const int h = static_cast<int>(std::lround(*values[i] * bh));
            cv.fill_rect(x, by + bh - h, w, h, kBar);
            const std::string v = fmt_tick(*values[i]);
            cv.text(x + (w - Canvas::text_width(v)) / 2, by + bh - h - 12, v, kInk);
        } else {
            cv.fill_rect(x, by + bh - 4, w, 4, kMissing);
            cv.text(x + (w - Canvas::text_width("N/A")) / 2, by + bh - 18, "N/A", kMissing);
        }
        cv.text(x + (w - Canvas::text_width(metric_names[i])) / 2, by + bh + 8, metric_names[i], kInk);
    }
    write_ppm(path, cv.image());
}

}  // namespace svcvv
