#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "gknet/error.hpp"
#include "gknet/geometry.hpp"
#include "gknet/tensor.hpp"

namespace gknet {

/// Per-frame 2D keypoints in input-image pixels plus visibility flags.
struct Keypoints2D {
  std::vector<Point2D> points;
  std::vector<std::uint8_t> visible;

  int count() const { return static_cast<int>(points.size()); }
};

/// Stack of per-keypoint probability maps. lambda is the input-to-heatmap
/// scale ratio used to convert map coordinates back to image pixels.
template <typename T>
struct Heatmap {
  int channels = 0;
  int height = 0;
  int width = 0;
  double lambda = 1.0;
  std::vector<T> values;

  Heatmap() = default;
  Heatmap(int n, int h, int w, double lam)
      : channels(n), height(h), width(w), lambda(lam) {
    if (n < 1 || h < 1 || w < 1 || !(lam > 0.0))
      throw InvalidInputError("heatmap: dimensions and lambda must be positive");
    values.assign(static_cast<std::size_t>(n) * h * w, T(0));
  }

  T& at(int c, int h, int w) {
    return values[(static_cast<std::size_t>(c) * height + h) * width + w];
  }
  T at(int c, int h, int w) const {
    return values[(static_cast<std::size_t>(c) * height + h) * width + w];
  }
  const T* channel(int c) const {
    return values.data() + static_cast<std::size_t>(c) * height * width;
  }
  T* channel(int c) {
    return values.data() + static_cast<std::size_t>(c) * height * width;
  }
};

/// Ground-truth heatmap synthesis. Channel i holds a Gaussian with mean at
/// the scaled keypoint (u/lambda, v/lambda), evaluated at pixel centers and
/// normalized so the peak pixel is exactly 1. Keypoints whose scaled center
/// falls outside the map (nearest pixel out of bounds) give an all-zero
/// channel.
template <typename T = float>
Heatmap<T> encode_heatmaps(const Keypoints2D& kps, int height, int width,
                           double lambda, double sigma = 2.0) {
  if (!(sigma > 0.0)) throw InvalidInputError("encode_heatmaps: sigma must be > 0");
  Heatmap<T> hm(kps.count(), height, width, lambda);
  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  for (int c = 0; c < hm.channels; ++c) {
    const double cu = kps.points[static_cast<std::size_t>(c)].u / lambda;
    const double cv = kps.points[static_cast<std::size_t>(c)].v / lambda;
    if (!(cu >= -0.5 && cu < width - 0.5 && cv >= -0.5 && cv < height - 0.5))
      continue;  // all-zero channel
    T* ch = hm.channel(c);
    double peak = 0.0;
    for (int h = 0; h < height; ++h) {
      const double dv = static_cast<double>(h) - cv;
      for (int w = 0; w < width; ++w) {
        const double du = static_cast<double>(w) - cu;
        const double g = std::exp(-(du * du + dv * dv) * inv2s2);
        ch[h * width + w] = static_cast<T>(g);
        if (g > peak) peak = g;
      }
    }
    // Renormalize so the nearest pixel carries exactly 1.
    const T scale = static_cast<T>(1.0 / peak);
    for (int i = 0; i < height * width; ++i) ch[i] *= scale;
  }
  return hm;
}

/// Decoded keypoints with the peak value per channel and a low-confidence
/// flag for degenerate (all-zero) channels.
struct DecodedKeypoints {
  Keypoints2D keypoints;
  std::vector<double> peak;
  std::vector<std::uint8_t> low_confidence;
};

/// Argmax decoding: (x, y) = lambda * argmax of each channel, row-major
/// first maximum on ties. With subpixel_offset (default on) a quarter-pixel
/// shift is applied toward the larger neighbor on each axis for interior
/// peaks. An all-zero channel decodes to the map center and is flagged.
template <typename T>
DecodedKeypoints decode_heatmaps(const Heatmap<T>& hm,
                                 bool subpixel_offset = true) {
  if (hm.channels < 1) throw InvalidInputError("decode_heatmaps: empty heatmap");
  DecodedKeypoints out;
  out.keypoints.points.resize(static_cast<std::size_t>(hm.channels));
  out.keypoints.visible.assign(static_cast<std::size_t>(hm.channels), 1);
  out.peak.resize(static_cast<std::size_t>(hm.channels));
  out.low_confidence.assign(static_cast<std::size_t>(hm.channels), 0);

  const int H = hm.height, W = hm.width;
  for (int c = 0; c < hm.channels; ++c) {
    const T* ch = hm.channel(c);
    int best = 0;
    bool all_zero = true;
    for (int i = 0; i < H * W; ++i) {
      if (ch[i] != T(0)) all_zero = false;
      if (ch[i] > ch[best]) best = i;
    }
    if (all_zero) {
      out.keypoints.points[static_cast<std::size_t>(c)] = {
          hm.lambda * (W - 1) / 2.0, hm.lambda * (H - 1) / 2.0};
      out.peak[static_cast<std::size_t>(c)] = 0.0;
      out.low_confidence[static_cast<std::size_t>(c)] = 1;
      continue;
    }
    const int ph = best / W, pw = best % W;
    double du = 0.0, dv = 0.0;
    if (subpixel_offset) {
      if (pw > 0 && pw < W - 1) {
        const T l = ch[ph * W + pw - 1], r = ch[ph * W + pw + 1];
        if (r > l)
          du = 0.25;
        else if (l > r)
          du = -0.25;
      }
      if (ph > 0 && ph < H - 1) {
        const T up = ch[(ph - 1) * W + pw], dn = ch[(ph + 1) * W + pw];
        if (dn > up)
          dv = 0.25;
        else if (up > dn)
          dv = -0.25;
      }
    }
    out.keypoints.points[static_cast<std::size_t>(c)] = {
        hm.lambda * (static_cast<double>(pw) + du),
        hm.lambda * (static_cast<double>(ph) + dv)};
    out.peak[static_cast<std::size_t>(c)] = static_cast<double>(ch[best]);
  }
  return out;
}

/// Keypoint RMSE over one frame:
/// sqrt( (1/N) sum_i ((x_i - gx_i)^2 + (y_i - gy_i)^2) ).
inline double keypoint_rmse(const Keypoints2D& pred, const Keypoints2D& gt) {
  if (pred.count() != gt.count() || pred.count() < 1)
    throw InvalidInputError("keypoint_rmse: keypoint counts must match and be >= 1");
  double sum = 0.0;
  for (int i = 0; i < pred.count(); ++i) {
    const Vec2 d = pred.points[static_cast<std::size_t>(i)] -
                   gt.points[static_cast<std::size_t>(i)];
    sum += d.u * d.u + d.v * d.v;
  }
  return std::sqrt(sum / static_cast<double>(pred.count()));
}

/// Pools squared errors across frames so a split-level RMSE can be reported
/// with the same formula as the per-frame metric.
class RmseAccumulator {
 public:
  void add(const Keypoints2D& pred, const Keypoints2D& gt) {
    if (pred.count() != gt.count() || pred.count() < 1)
      throw InvalidInputError("RmseAccumulator: keypoint counts must match");
    for (int i = 0; i < pred.count(); ++i) {
      const Vec2 d = pred.points[static_cast<std::size_t>(i)] -
                     gt.points[static_cast<std::size_t>(i)];
      sum_ += d.u * d.u + d.v * d.v;
      ++count_;
    }
  }

  void add_point(const Point2D& pred, const Point2D& gt) {
    const Vec2 d = pred - gt;
    sum_ += d.u * d.u + d.v * d.v;
    ++count_;
  }

  std::size_t count() const { return count_; }

  double value() const {
    if (count_ == 0) throw InvalidInputError("RmseAccumulator: no samples");
    return std::sqrt(sum_ / static_cast<double>(count_));
  }

 private:
  double sum_ = 0.0;
  std::size_t count_ = 0;
};

}  // namespace gknet
