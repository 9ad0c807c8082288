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

#include "cambi/preprocess.hpp"

#include <string>

#include "cambi/errors.hpp"

namespace cambi {

LumaFrame to_10bit(const LumaFrame& frame) {
  if (frame.bit_depth == 10) return frame;
  if (frame.bit_depth != 8) {
    throw ConfigError("unsupported bit depth " + std::to_string(frame.bit_depth));
  }
  return LumaFrame(frame.samples * std::uint16_t{4}, 10);
}

LumaFrame anti_dither_filter(const LumaFrame& frame) {
  const int w = frame.width();
  const int h = frame.height();
  LumaFrame out(w, h, frame.bit_depth);
  for (int y = 0; y < h; ++y) {
    const int y1 = y + 1 < h ? y + 1 : y;
    for (int x = 0; x < w; ++x) {
      const int x1 = x + 1 < w ? x + 1 : x;
      const unsigned sum = static_cast<unsigned>(frame(y, x)) + frame(y, x1) + frame(y1, x) +
                           frame(y1, x1);
      out.samples(y, x) = static_cast<std::uint16_t>(sum >> 2);
    }
  }
  return out;
}

LumaFrame upscale_to_canvas(const LumaFrame& frame, const CambiConfig& config) {
  const int w = frame.width();
  const int h = frame.height();
  const int cw = config.canvas_width;
  const int ch = config.canvas_height;
  if (w > cw || h > ch) {
    throw ConfigError("frame " + std::to_string(w) + "x" + std::to_string(h) +
                      " is larger than the canvas " + std::to_string(cw) + "x" +
                      std::to_string(ch));
  }
  if (w == cw && h == ch) return frame;

  std::vector<int> src_x(static_cast<std::size_t>(cw));
  for (int x = 0; x < cw; ++x) {
    src_x[x] = static_cast<int>(static_cast<std::int64_t>(x) * w / cw);
  }
  LumaFrame out(cw, ch, frame.bit_depth);
  for (int y = 0; y < ch; ++y) {
    const int sy = static_cast<int>(static_cast<std::int64_t>(y) * h / ch);
    for (int x = 0; x < cw; ++x) out.samples(y, x) = frame(sy, src_x[x]);
  }
  return out;
}

LumaFrame preprocess(const LumaFrame& frame, const CambiConfig& config) {
  return upscale_to_canvas(anti_dither_filter(to_10bit(frame)), config);
}

}  // namespace cambi
