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

#include "cambi/synthgen.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

#include "cambi/errors.hpp"

namespace cambi {

namespace {

constexpr std::array<std::array<int, 4>, 4> kBayer4 = {{
    {0, 8, 2, 10},
    {12, 4, 14, 6},
    {3, 11, 1, 9},
    {15, 7, 13, 5},
}};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename Int>
Int parse_number(const std::string& key, const std::string& value) {
  Int v{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw SpecError("invalid value '" + value + "' for " + key);
  }
  return v;
}

// 10-bit intensity -> quantized / dithered 10-bit value, before the 8-bit cut.
double shape_sample(const SyntheticSpec& spec, double ideal, int x, int y) {
  double v = ideal;
  if (spec.quant_step > 0) {
    const double step = spec.quant_step;
    if (spec.dither == Dither::bayer4) {
      v += step * ((kBayer4[y & 3][x & 3] + 0.5) / 16.0 - 0.5);
    }
    v = std::round(v / step) * step;
  }
  return std::clamp(v, 0.0, 1023.0);
}

std::uint16_t to_8bit(double v10) {
  return static_cast<std::uint16_t>(std::clamp(std::round(v10 / 4.0), 0.0, 255.0));
}

}  // namespace

Pattern parse_pattern(const std::string& name) {
  if (name == "h_ramp") return Pattern::h_ramp;
  if (name == "v_ramp") return Pattern::v_ramp;
  if (name == "flat") return Pattern::flat;
  if (name == "white_noise") return Pattern::white_noise;
  throw SpecError("unknown pattern '" + name + "'");
}

Dither parse_dither(const std::string& name) {
  if (name == "none") return Dither::none;
  if (name == "bayer4") return Dither::bayer4;
  throw SpecError("unknown dither '" + name + "'");
}

std::string to_string(Pattern pattern) {
  switch (pattern) {
    case Pattern::h_ramp:
      return "h_ramp";
    case Pattern::v_ramp:
      return "v_ramp";
    case Pattern::flat:
      return "flat";
    case Pattern::white_noise:
      return "white_noise";
  }
  return "?";
}

std::string to_string(Dither dither) { return dither == Dither::bayer4 ? "bayer4" : "none"; }

void validate(const SyntheticSpec& spec) {
  if (spec.width < 1 || spec.height < 1) throw SpecError("width and height must be positive");
  if (spec.frames < 1) throw SpecError("frames must be >= 1");
  if (spec.pattern == Pattern::h_ramp && spec.width < 2) {
    throw SpecError("h_ramp needs width >= 2");
  }
  if (spec.pattern == Pattern::v_ramp && spec.height < 2) {
    throw SpecError("v_ramp needs height >= 2");
  }
  const auto in_range = [](int v) { return v >= 0 && v <= 1023; };
  if (!in_range(spec.start_value) || !in_range(spec.end_value)) {
    throw SpecError("start and end values must be in [0,1023]");
  }
  if (spec.quant_step < 0) throw SpecError("quant_step must be >= 0");
  if (spec.frame_rate.num <= 0 || spec.frame_rate.den <= 0) {
    throw SpecError("frame rate must be positive");
  }
}

SyntheticSpec parse_synthetic_spec(const std::string& text, SyntheticSpec base) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw SpecError("line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "width") {
      base.width = parse_number<int>(key, value);
    } else if (key == "height") {
      base.height = parse_number<int>(key, value);
    } else if (key == "frames") {
      base.frames = parse_number<int>(key, value);
    } else if (key == "pattern") {
      base.pattern = parse_pattern(value);
    } else if (key == "start") {
      base.start_value = parse_number<int>(key, value);
    } else if (key == "end") {
      base.end_value = parse_number<int>(key, value);
    } else if (key == "quant_step") {
      base.quant_step = parse_number<int>(key, value);
    } else if (key == "dither") {
      base.dither = parse_dither(value);
    } else if (key == "seed") {
      base.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "fps") {
      try {
        base.frame_rate = parse_frame_rate(value);
      } catch (const Error& e) {
        throw SpecError(e.what());
      }
    } else {
      throw SpecError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  return base;
}

VideoStream generate(const SyntheticSpec& spec) {
  validate(spec);
  VideoStream stream;
  stream.frame_rate = spec.frame_rate;
  stream.source_descriptor = "synthetic " + to_string(spec.pattern);

  const double start = spec.start_value;
  const double span = spec.end_value - spec.start_value;
  const auto ramp = [&](int i, int n) { return start + span * i / (n - 1); };

  std::mt19937_64 rng(spec.seed);
  const int lo = std::min(spec.start_value, spec.end_value);
  const auto range = static_cast<std::uint64_t>(std::abs(spec.end_value - spec.start_value) + 1);

  LumaFrame still;
  for (int f = 0; f < spec.frames; ++f) {
    if (spec.pattern != Pattern::white_noise && f > 0) {
      stream.frames.push_back(still);
      continue;
    }
    LumaFrame frame(spec.width, spec.height, 8);
    for (int y = 0; y < spec.height; ++y) {
      for (int x = 0; x < spec.width; ++x) {
        double ideal = start;
        switch (spec.pattern) {
          case Pattern::h_ramp:
            ideal = ramp(x, spec.width);
            break;
          case Pattern::v_ramp:
            ideal = ramp(y, spec.height);
            break;
          case Pattern::flat:
            break;
          case Pattern::white_noise:
            ideal = lo + static_cast<double>(rng() % range);
            break;
        }
        frame.samples(y, x) = to_8bit(shape_sample(spec, ideal, x, y));
      }
    }
    if (f == 0) still = frame;
    stream.frames.push_back(std::move(frame));
  }
  return stream;
}

}  // namespace cambi
