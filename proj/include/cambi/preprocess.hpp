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

#include "cambi/config.hpp"
#include "cambi/frame.hpp"

namespace cambi {

// 8-bit samples are shifted left by two; 10-bit frames pass through.
LumaFrame to_10bit(const LumaFrame& frame);

// Same-size 2x2 box blur, floor of the mean, edges replicated.
LumaFrame anti_dither_filter(const LumaFrame& frame);

// Nearest-neighbour upscale to the canvas. Throws ConfigError when the
// frame is larger than the canvas on either axis.
LumaFrame upscale_to_canvas(const LumaFrame& frame, const CambiConfig& config);

/// to_10bit -> anti_dither_filter -> upscale_to_canvas.
LumaFrame preprocess(const LumaFrame& frame, const CambiConfig& config);

}  // namespace cambi
