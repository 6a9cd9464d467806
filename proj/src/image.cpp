#include "svcvv/image.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>

#include "svcvv/errors.hpp"

namespace svcvv {
namespace {

// Reads one whitespace-delimited token, skipping '#' comment lines, as the
// PPM header grammar requires.
std::string next_token(std::istream& in, const std::string& path) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty()) return tok;
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    if (tok.empty()) throw InputError(path + ": truncated image header");
    return tok;
}

void read_header(std::istream& in, const std::string& path, int& w, int& h) {
    if (next_token(in, path) != "P6")
        throw InputError(path + ": not a binary PPM (P6) file");
    const long lw = std::strtol(next_token(in, path).c_str(), nullptr, 10);
    const long lh = std::strtol(next_token(in, path).c_str(), nullptr, 10);
    const long maxval = std::strtol(next_token(in, path).c_str(), nullptr, 10);
    if (lw <= 0 || lh <= 0) throw InputError(path + ": non-positive image dimensions");
    if (maxval != 255) throw InputError(path + ": unsupported maxval (need 255)");
    w = static_cast<int>(lw);
    h = static_cast<int>(lh);
}

}  // namespace

ColorImage read_ppm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open image: " + path);
    ColorImage img;
    read_header(in, path, img.width, img.height);
    const std::size_t n = static_cast<std::size_t>(img.width) * img.height * 3;
    img.rgb.resize(n);
    in.read(reinterpret_cast<char*>(img.rgb.data()), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n)
        throw InputError(path + ": truncated pixel data");
    return img;
}

void write_ppm(const std::string& path, const ColorImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write image: " + path);
    out << "P6\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.rgb.data()),
              static_cast<std::streamsize>(img.rgb.size()));
    if (!out) throw InputError("short write: " + path);
}

void probe_ppm(const std::string& path, int& width, int& height) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open image: " + path);
    read_header(in, path, width, height);
}

ColorImage crop_center(const ColorImage& img, int crop_width, int crop_height) {
    if (crop_width <= 0 || crop_height <= 0)
        throw InputError("crop_center: crop size must be positive");
    if (crop_width > img.width || crop_height > img.height)
        throw InputError("crop_center: crop exceeds frame size");
    const int x0 = (img.width - crop_width) / 2;
    const int y0 = (img.height - crop_height) / 2;
    ColorImage out;
    out.width = crop_width;
    out.height = crop_height;
    out.rgb.resize(static_cast<std::size_t>(crop_width) * crop_height * 3);
    for (int r = 0; r < crop_height; ++r) {
        const std::uint8_t* src = img.pixel(y0 + r, x0);
        std::uint8_t* dst = out.pixel(r, 0);
        std::copy(src, src + static_cast<std::size_t>(crop_width) * 3, dst);
    }
    return out;
}

}  // namespace svcvv
