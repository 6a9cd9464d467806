#pragma once

#include <span>
#include <string>

#include "svcvv/eval.hpp"
#include "svcvv/image.hpp"

namespace svcvv {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
};

/// Minimal raster canvas for report figures. Text uses a built-in 5x7
/// uppercase font; lowercase input is uppercased on draw.
class Canvas {
  public:
    Canvas(int width, int height, Rgb background);

    void set(int x, int y, Rgb c);
    void fill_rect(int x, int y, int w, int h, Rgb c);
    void line(int x0, int y0, int x1, int y1, Rgb c);
    void text(int x, int y, const std::string& s, Rgb c, int scale = 1);
    static int text_width(const std::string& s, int scale = 1);
    static int text_height(int scale = 1);

    const ColorImage& image() const { return img_; }

  private:
    ColorImage img_;
};

/// Single-series line chart with axes and ticks, written as binary PPM.
void plot_line_chart(const std::string& path, const std::string& title, const std::string& x_label,
                     const std::string& y_label, std::span<const double> xs, std::span<const double> ys);

/// Two-panel evaluation figure: confusion counts and the derived metrics.
void plot_eval_report(const std::string& path, const ConfusionMatrix& cm, const MetricReport& mr,
                      const std::string& subtitle);

}  // namespace svcvv
