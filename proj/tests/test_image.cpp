#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "svcvv/errors.hpp"
#include "svcvv/image.hpp"

using namespace svcvv;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "svcvv_image_tests";
    fs::create_directories(dir);
    return dir / name;
}

ColorImage make_gradient(int w, int h) {
    ColorImage img;
    img.width = w;
    img.height = h;
    img.rgb.resize(static_cast<std::size_t>(w) * h * 3);
    std::size_t at = 0;
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) {
            img.rgb[at++] = static_cast<std::uint8_t>((i * 7 + j) % 256);
            img.rgb[at++] = static_cast<std::uint8_t>((i + j * 3) % 256);
            img.rgb[at++] = static_cast<std::uint8_t>((i * j) % 256);
        }
    return img;
}

}  // namespace

TEST_CASE("ppm round trip is lossless") {
    const ColorImage img = make_gradient(37, 21);
    const auto path = temp_file("roundtrip.ppm");
    write_ppm(path.string(), img);
    const ColorImage back = read_ppm(path.string());
    CHECK(back.width == 37);
    CHECK(back.height == 21);
    CHECK(back.rgb == img.rgb);
}

TEST_CASE("probe reads dimensions without the pixel payload") {
    const auto path = temp_file("probe.ppm");
    write_ppm(path.string(), make_gradient(64, 48));
    int w = 0, h = 0;
    probe_ppm(path.string(), w, h);
    CHECK(w == 64);
    CHECK(h == 48);
}

TEST_CASE("header tolerates comments and arbitrary whitespace") {
    const auto path = temp_file("comments.ppm");
    std::ofstream f(path, std::ios::binary);
    f << "P6\n# a comment\n  2 # inline\n2\n255\n";
    const char pixels[12] = {0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3};
    f.write(pixels, sizeof pixels);
    f.close();
    const ColorImage img = read_ppm(path.string());
    CHECK(img.width == 2);
    CHECK(img.height == 2);
    CHECK(img.rgb[9] == 3);
}

TEST_CASE("malformed ppm inputs are rejected") {
    SUBCASE("wrong magic") {
        const auto path = temp_file("magic.ppm");
        std::ofstream(path, std::ios::binary) << "P5\n2 2\n255\nxxxx";
        CHECK_THROWS_AS(read_ppm(path.string()), InputError);
    }
    SUBCASE("unsupported maxval") {
        const auto path = temp_file("maxval.ppm");
        std::ofstream(path, std::ios::binary) << "P6\n2 2\n65535\n";
        CHECK_THROWS_AS(read_ppm(path.string()), InputError);
    }
    SUBCASE("truncated payload") {
        const auto path = temp_file("short.ppm");
        std::ofstream(path, std::ios::binary) << "P6\n4 4\n255\nabc";
        CHECK_THROWS_AS(read_ppm(path.string()), InputError);
    }
    SUBCASE("missing file") { CHECK_THROWS_AS(read_ppm("/nonexistent/nope.ppm"), InputError); }
}

TEST_CASE("center crop takes the middle window") {
    // 1280x720 -> 1000x480 leaves offsets (140, 120).
    ColorImage img;
    img.width = 1280;
    img.height = 720;
    img.rgb.assign(static_cast<std::size_t>(1280) * 720 * 3, 0);
    // Tag the pixel that must land at (0, 0) after the crop.
    const std::size_t tag = 3 * (static_cast<std::size_t>(120) * 1280 + 140);
    img.rgb[tag] = 200;
    // And the one that must land at the last position (999, 479).
    const std::size_t last = 3 * (static_cast<std::size_t>(120 + 479) * 1280 + 140 + 999);
    img.rgb[last + 2] = 123;

    const ColorImage out = crop_center(img, 1000, 480);
    CHECK(out.width == 1000);
    CHECK(out.height == 480);
    CHECK(out.rgb[0] == 200);
    CHECK(out.rgb[out.rgb.size() - 1] == 123);
}

TEST_CASE("crop of the full frame is the identity") {
    const ColorImage img = make_gradient(17, 9);
    const ColorImage out = crop_center(img, 17, 9);
    CHECK(out.rgb == img.rgb);
}

TEST_CASE("odd margins split with the floor on the leading side") {
    ColorImage img = make_gradient(5, 4);
    const ColorImage out = crop_center(img, 4, 3);  // margins 1 and 1 -> offsets (0, 0)
    CHECK(out.width == 4);
    CHECK(out.height == 3);
    // offset_x = (5-4)/2 = 0, offset_y = (4-3)/2 = 0
    CHECK(out.rgb[0] == img.rgb[0]);
}

TEST_CASE("oversized crop is rejected") {
    const ColorImage img = make_gradient(10, 10);
    CHECK_THROWS_AS(crop_center(img, 11, 5), InputError);
    CHECK_THROWS_AS(crop_center(img, 5, 11), InputError);
    CHECK_THROWS_AS(crop_center(img, 0, 5), InputError);
}
