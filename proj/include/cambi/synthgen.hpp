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

#include "cambi/frame.hpp"

namespace cambi {

enum class Pattern { h_ramp, v_ramp, flat, white_noise };
enum class Dither { none, bayer4 };

/// Synthetic banding stimulus. Intensities and quant_step are in 10-bit
/// code values; the generated stream is 8-bit.
struct SyntheticSpec {
  int width = 64;
  int height = 64;
  int frames = 1;
  Pattern pattern = Pattern::flat;
  int start_value = 512;
  int end_value = 512;
  int quant_step = 0;
  Dither dither = Dither::none;
  std::uint64_t seed = 1;
  FrameRate frame_rate{30, 1};
};

Pattern parse_pattern(const std::string& name);
Dither parse_dither(const std::string& name);
std::string to_string(Pattern pattern);
std::string to_string(Dither dither);

void validate(const SyntheticSpec& spec);

/// Parses `key=value` lines ('#' starts a comment) on top of `base`.
/// Keys mirror the struct fields: width, height, frames, pattern, start,
/// end, quant_step, dither, seed, fps.
SyntheticSpec parse_synthetic_spec(const std::string& text, SyntheticSpec base = {});

/// Renders the stimulus as an 8-bit stream. Deterministic for a fixed seed.
VideoStream generate(const SyntheticSpec& spec);

}  // namespace cambi
