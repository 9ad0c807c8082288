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

#include "cambi/pipeline.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "cambi/banding.hpp"
#include "cambi/errors.hpp"
#include "cambi/preprocess.hpp"

namespace cambi {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CAMBI_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw ConfigError("CAMBI_THREADS must be a positive integer");
    return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

FrameScore score_frame(const LumaFrame& frame, const CambiConfig& config, std::size_t frame_index,
                       double time_sec, int threads) {
  validate(config);
  validate(frame);
  const FieldPlane combined = combined_field(preprocess(frame, config), config, threads);
  return {frame_index, time_sec, pool_top_percent(combined, config.top_percent)};
}

VideoReport score_video(const VideoStream& stream, const CambiConfig& config, int threads) {
  validate(config);
  std::vector<FrameScore> scores;
  for (const auto& sel : select_frames(stream, config.t_sec)) {
    scores.push_back(score_frame(stream.frames[sel.index], config, sel.index, sel.time_sec, threads));
  }
  return video_score(scores, config);
}

VideoReport score_video(FrameSource& source, const CambiConfig& config, int threads) {
  validate(config);
  std::vector<FrameScore> scores;
  for (const auto& sel : select_frames(source.frame_count(), source.frame_rate(), config.t_sec)) {
    scores.push_back(score_frame(source.read(sel.index), config, sel.index, sel.time_sec, threads));
  }
  return video_score(scores, config);
}

}  // namespace cambi
