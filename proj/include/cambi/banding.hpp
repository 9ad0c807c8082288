/**
 *
 *  Copyright 2026 The cambi Authors
 *
 *     Licensed under the Apache License, Version 2.0 (the "License");
 *     you may not use this file except in compliance with the License.
 *     You may obtain a copy of the License at
 *
 *         http://www.apache.org/licenses/LICENSE-2.0
 *
 *     Unless required by applicable law or agreed to in writing, software
 *     distributed under the License is distributed on an "AS IS" BASIS,
 *     WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *     See the License for the specific language governing permissions and
 *     limitations under the License.
 *
 */

#pragma once

#include <cstdint>
#include <vector>

#include "cambi/config.hpp"
#include "cambi/frame.hpp"
#include "cambi/plane.hpp"

namespace cambi {

/// Per-pixel flag, 1 where the gradient magnitude is below tau_g.
struct TextureMask {
  Plane<std::uint8_t> non_texture;

  int width() const { return static_cast<int>(non_texture.cols()); }
  int height() const { return static_cast<int>(non_texture.rows()); }
};

/// Banding confidence for one contrast step at one scale, values in [0, 0.5].
struct ConfidenceMap {
  int k = 1;
  int scale_index = 0;
  FieldPlane values;
};

/// All max_k x num_scales confidence maps for one frame.
struct BandingMapSet {
  std::vector<ConfidenceMap> maps;  // scale-major, k ascending within a scale
  int max_k = 0;
  int num_scales = 0;
  std::size_t frame_index = 0;
  double time_sec = 0.0;

  const ConfidenceMap& at(int k, int scale_index) const {
    return maps[static_cast<std::size_t>(scale_index * max_k + (k - 1))];
  }
};

// Forward-difference max-norm gradient; the last column/row difference is 0.
TextureMask texture_mask(const LumaFrame& frame, int tau_g);

// 2x2 block mode, output dims ceil(input / 2); ties go to the smaller value.
LumaFrame mode_downsample(const LumaFrame& frame);

/// Fractions p(d) for d = -max_k..max_k (index d + max_k) of non-texture
/// pixels in the window x window box around (x, y), clipped to the frame,
/// whose intensity equals I(x, y) + d. All zero if the box holds no
/// non-texture pixel.
std::vector<double> neighborhood_fractions(const LumaFrame& frame, const TextureMask& mask,
                                           int x, int y, int window, int max_k);

// p0 * max(pm / (p0 + pm), pp / (p0 + pp)), with a zero-denominator ratio
// taken as 0.
inline double confidence_from(double p0, double pm, double pp) {
  const double lo = (p0 + pm) > 0.0 ? pm / (p0 + pm) : 0.0;
  const double hi = (p0 + pp) > 0.0 ? pp / (p0 + pp) : 0.0;
  return p0 * (lo > hi ? lo : hi);
}

/// Confidence at contrast step k from a fraction vector laid out as returned
/// by neighborhood_fractions (p.size() == 2 * max_k + 1, k <= max_k).
double confidence(const std::vector<double>& p, int k);

/// Confidence maps for every k in 1..max_k at one scale. `frame` is the
/// frame at that scale; the window size is not rescaled.
std::vector<ConfidenceMap> compute_scale_maps(const LumaFrame& frame, const CambiConfig& config,
                                              int scale_index, int threads = 1);

/// Full map family for a preprocessed (10-bit, canvas-sized) frame.
BandingMapSet compute_map_set(const LumaFrame& frame, const CambiConfig& config,
                              int threads = 1);

/// Canvas-resolution field of sum_k sum_s c(k, s) * k * log2(16 / 2^s),
/// accumulated scale by scale without keeping the maps. Bit-identical to
/// per_pixel_combined(compute_map_set(frame, config), config).
FieldPlane combined_field(const LumaFrame& frame, const CambiConfig& config, int threads = 1);

namespace detail {

// Histogram of non-texture samples over a window x window box that slides
// down one row at a time. Counts are kept per (value, column) so that the
// fractions at any pixel are O(1) lookups; adding or removing one image row
// costs O(width * window).
class WindowHistogram {
 public:
  WindowHistogram(int width, int radius, int min_value, int max_value);

  void add_row(const std::uint16_t* values, const std::uint8_t* mask);
  void remove_row(const std::uint16_t* values, const std::uint8_t* mask);

  int count(int value, int x) const {
    if (value < min_value_ || value > max_value_) return 0;
    return counts_[static_cast<std::size_t>(value - min_value_) * width_ + x];
  }
  int total(int x) const { return totals_[static_cast<std::size_t>(x)]; }

 private:
  template <int Sign>
  void update(const std::uint16_t* values, const std::uint8_t* mask);

  int width_;
  int radius_;
  int min_value_;
  int max_value_;
  std::vector<std::uint16_t> counts_;
  std::vector<std::int32_t> totals_;
  std::vector<std::int32_t> prefix_;
};

}  // namespace detail

}  // namespace cambi
