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

#include <cstddef>
#include <span>
#include <vector>

#include "cambi/banding.hpp"
#include "cambi/config.hpp"
#include "cambi/frame.hpp"

namespace cambi {

struct FrameScore {
  std::size_t frame_index = 0;
  double time_sec = 0.0;
  double score = 0.0;
};

// Score at or above which banding is considered visible.
inline constexpr double kBandingThreshold = 5.0;

struct VideoReport {
  double video_score = 0.0;
  std::vector<FrameScore> frame_scores;
  CambiConfig config_echo;
  bool banding_flag = false;
};

struct SelectedFrame {
  std::size_t index = 0;
  double time_sec = 0.0;
};

// log2(16 / 2^scale_index): 4, 3, 2, 1, 0.
double scale_weight(int scale_index);

// Single term of the per-pixel sum. Shared so that every accumulation path
// rounds identically.
inline double weighted_confidence(double c, int k, double weight) {
  return c * static_cast<double>(k) * weight;
}

/// Replicates every map to canvas resolution and sums c * k * weight(scale).
FieldPlane per_pixel_combined(const BandingMapSet& map_set, const CambiConfig& config);

/// Mean of the top floor(top_percent * N) values of `field` (at least one).
double pool_top_percent(const FieldPlane& field, double top_percent);

FrameScore frame_score(const BandingMapSet& map_set, const CambiConfig& config);

/// Frames round(n * t_sec * fps) for n = 0, 1, ... below frame_count.
std::vector<SelectedFrame> select_frames(std::size_t frame_count, FrameRate frame_rate,
                                         double t_sec);
std::vector<SelectedFrame> select_frames(const VideoStream& stream, double t_sec);

VideoReport video_score(std::span<const FrameScore> frame_scores,
                        const CambiConfig& config = {});

}  // namespace cambi
