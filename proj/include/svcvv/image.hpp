#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace svcvv {

/// 8-bit interleaved RGB, row-major, row 0 at the top of the frame.
struct ColorImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;  // height * width * 3

    std::uint8_t* pixel(int row, int col) { return rgb.data() + 3 * (static_cast<std::size_t>(row) * width + col); }
    const std::uint8_t* pixel(int row, int col) const { return rgb.data() + 3 * (static_cast<std::size_t>(row) * width + col); }
};

/// Single-channel float plane in [0, 1] after normalization. `no_contrast`
/// marks a constant source frame whose normalization was impossible; callers
/// must hold their previous estimate instead of using the payload.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<float> v;  // height * width
    bool no_contrast = false;

    float at(int row, int col) const { return v[static_cast<std::size_t>(row) * width + col]; }
};

/// Binary (P6, maxval 255) portable pixmap codec. The synthetic corpus and
/// every frame consumed by the estimator use this container.
ColorImage read_ppm(const std::string& path);
void write_ppm(const std::string& path, const ColorImage& img);
/// Header-only probe: width/height without decoding the payload.
void probe_ppm(const std::string& path, int& width, int& height);

/// Keep the central region of the stated size; offsets are split evenly
/// (floor division) between the two sides.
ColorImage crop_center(const ColorImage& img, int crop_width, int crop_height);

}  // namespace svcvv
