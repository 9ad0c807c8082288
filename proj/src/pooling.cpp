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

#include "cambi/pooling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "cambi/errors.hpp"

namespace cambi {

double scale_weight(int scale_index) {
  return std::log2(16.0 / std::ldexp(1.0, scale_index));
}

FieldPlane per_pixel_combined(const BandingMapSet& map_set, const CambiConfig& config) {
  const int cw = config.canvas_width;
  const int ch = config.canvas_height;
  FieldPlane combined = FieldPlane::Zero(ch, cw);
  for (int s = 0; s < map_set.num_scales; ++s) {
    const double weight = scale_weight(s);
    for (int k = 1; k <= map_set.max_k; ++k) {
      const FieldPlane& values = map_set.at(k, s).values;
      for (int y = 0; y < ch; ++y) {
        const double* src = values.row(y >> s).data();
        double* dst = combined.row(y).data();
        for (int x = 0; x < cw; ++x) dst[x] += weighted_confidence(src[x >> s], k, weight);
      }
    }
  }
  return combined;
}

double pool_top_percent(const FieldPlane& field, double top_percent) {
  if (field.size() == 0) throw EmptyInputError("cannot pool an empty field");
  if (!(top_percent > 0.0 && top_percent <= 1.0)) {
    throw ConfigError("top_percent must be in (0,1]");
  }
  const auto n = static_cast<std::size_t>(field.size());
  const auto m = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::floor(top_percent * static_cast<double>(n))));
  if (m == n) return field.sum() / static_cast<double>(n);
  std::vector<double> values(field.data(), field.data() + n);
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(m - 1),
                   values.end(), std::greater<>());
  // Summed in ascending order: the score depends only on the selected values.
  std::sort(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(m));
  const double sum = std::accumulate(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(m), 0.0);
  return sum / static_cast<double>(m);
}

FrameScore frame_score(const BandingMapSet& map_set, const CambiConfig& config) {
  return {map_set.frame_index, map_set.time_sec,
          pool_top_percent(per_pixel_combined(map_set, config), config.top_percent)};
}

std::vector<SelectedFrame> select_frames(std::size_t frame_count, FrameRate frame_rate,
                                         double t_sec) {
  if (frame_count == 0) throw EmptyInputError("no frames to score");
  if (frame_rate.num <= 0 || frame_rate.den <= 0) throw ConfigError("frame rate must be positive");
  if (!(t_sec > 0.0)) throw ConfigError("t_sec must be > 0");
  std::vector<SelectedFrame> selected;
  const double step = t_sec * frame_rate.value();
  if (step <= 1.0) {
    // Consecutive rounded indices never skip an integer: every frame is taken.
    for (std::size_t i = 0; i < frame_count; ++i) selected.push_back({i, frame_rate.seconds_at(i)});
    return selected;
  }
  for (std::size_t n = 0;; ++n) {
    const double index = std::round(static_cast<double>(n) * step);
    if (index >= static_cast<double>(frame_count)) break;
    const auto i = static_cast<std::size_t>(index);
    if (!selected.empty() && selected.back().index == i) continue;
    selected.push_back({i, frame_rate.seconds_at(i)});
  }
  return selected;
}

std::vector<SelectedFrame> select_frames(const VideoStream& stream, double t_sec) {
  return select_frames(stream.size(), stream.frame_rate, t_sec);
}

VideoReport video_score(std::span<const FrameScore> frame_scores, const CambiConfig& config) {
  if (frame_scores.empty()) throw EmptyInputError("no frame scores to pool");
  VideoReport report;
  report.frame_scores.assign(frame_scores.begin(), frame_scores.end());
  // Summed in ascending order so the mean does not depend on frame order.
  std::vector<double> scores;
  scores.reserve(frame_scores.size());
  for (const auto& f : frame_scores) scores.push_back(f.score);
  std::sort(scores.begin(), scores.end());
  const double sum = std::accumulate(scores.begin(), scores.end(), 0.0);
  report.video_score = sum / static_cast<double>(frame_scores.size());
  report.banding_flag = report.video_score >= kBandingThreshold;
  report.config_echo = config;
  return report;
}

}  // namespace cambi
