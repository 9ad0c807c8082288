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
#include <string>
#include <vector>

#include "cambi/plane.hpp"

namespace cambi {

/// Single-channel luma plane with an explicit bit depth (8 or 10).
struct LumaFrame {
  SamplePlane samples;
  int bit_depth = 8;

  LumaFrame() = default;
  LumaFrame(SamplePlane s, int depth) : samples(std::move(s)), bit_depth(depth) {}
  LumaFrame(int width, int height, int depth, std::uint16_t fill = 0)
      : samples(SamplePlane::Constant(height, width, fill)), bit_depth(depth) {}

  int width() const { return static_cast<int>(samples.cols()); }
  int height() const { return static_cast<int>(samples.rows()); }
  std::uint16_t max_value() const {
    return static_cast<std::uint16_t>((1u << bit_depth) - 1u);
  }
  std::uint16_t operator()(int y, int x) const { return samples(y, x); }

  friend bool operator==(const LumaFrame& a, const LumaFrame& b) {
    return a.bit_depth == b.bit_depth && a.samples.rows() == b.samples.rows() &&
           a.samples.cols() == b.samples.cols() && (a.samples == b.samples).all();
  }
};

/// Throws FormatError when the bit depth is unsupported or a sample exceeds it.
void validate(const LumaFrame& frame);

struct FrameRate {
  std::int64_t num = 30;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  double seconds_at(std::size_t index) const {
    return static_cast<double>(index) * static_cast<double>(den) / static_cast<double>(num);
  }
};

/// Parses "30", "30000/1001", "24000:1001" or a decimal such as "23.976".
FrameRate parse_frame_rate(const std::string& text);

struct VideoStream {
  std::vector<LumaFrame> frames;
  FrameRate frame_rate;
  std::string source_descriptor;

  std::size_t size() const { return frames.size(); }
  bool empty() const { return frames.empty(); }
};

}  // namespace cambi
