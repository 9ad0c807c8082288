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

#include "cambi/config.hpp"
#include "cambi/frame.hpp"
#include "cambi/frame_io.hpp"
#include "cambi/pooling.hpp"

namespace cambi {

// Worker count from an explicit request, else CAMBI_THREADS, else the
// hardware concurrency.
int resolve_threads(int requested);

/// Preprocess, build the combined field and pool it. `threads` splits rows
/// within each scale; the result does not depend on it.
FrameScore score_frame(const LumaFrame& frame, const CambiConfig& config,
                       std::size_t frame_index = 0, double time_sec = 0.0, int threads = 1);

VideoReport score_video(const VideoStream& stream, const CambiConfig& config, int threads = 1);
VideoReport score_video(FrameSource& source, const CambiConfig& config, int threads = 1);

}  // namespace cambi
