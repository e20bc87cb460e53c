#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "gknet/error.hpp"

namespace gknet {

/// 8-bit grayscale image, row-major.
struct ImageU8 {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  ImageU8() = default;
  ImageU8(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h),
        pixels(static_cast<std::size_t>(w) * h, fill) {}

  std::uint8_t& at(int x, int y) {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  std::uint8_t at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  bool contains(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
};

/// 8-bit RGB image (overlay rendering only).
struct ImageRGB {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // 3 bytes per pixel

  ImageRGB() = default;
  ImageRGB(int w, int h)
      : width(w), height(h),
        pixels(static_cast<std::size_t>(w) * h * 3, 0) {}

  static ImageRGB from_gray(const ImageU8& g) {
    ImageRGB out(g.width, g.height);
    for (std::size_t i = 0; i < g.pixels.size(); ++i) {
      out.pixels[3 * i] = out.pixels[3 * i + 1] = out.pixels[3 * i + 2] =
          g.pixels[i];
    }
    return out;
  }

  void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    if (x < 0 || x >= width || y < 0 || y >= height) return;
    const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
    pixels[i] = r;
    pixels[i + 1] = g;
    pixels[i + 2] = b;
  }
};

/// Bilinear sample with zero padding outside the image. Coordinates follow
/// the pixel-center convention: (0,0) is the center of the top-left pixel.
inline double bilinear_sample(const ImageU8& img, double x, double y) {
  const int x0 = static_cast<int>(std::floor(x));
  const int y0 = static_cast<int>(std::floor(y));
  const double fx = x - x0, fy = y - y0;
  auto value = [&](int xi, int yi) -> double {
    return img.contains(xi, yi) ? static_cast<double>(img.at(xi, yi)) : 0.0;
  };
  return (1 - fx) * (1 - fy) * value(x0, y0) + fx * (1 - fy) * value(x0 + 1, y0) +
         (1 - fx) * fy * value(x0, y0 + 1) + fx * fy * value(x0 + 1, y0 + 1);
}

inline std::uint8_t clamp_u8(double v) {
  return static_cast<std::uint8_t>(std::min(255.0, std::max(0.0, std::round(v))));
}

}  // namespace gknet
