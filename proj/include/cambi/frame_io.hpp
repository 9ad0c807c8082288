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
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "cambi/frame.hpp"
#include "cambi/plane.hpp"

namespace cambi {

enum class PixelFormat { yuv420, yuv420p10le, gray };

PixelFormat parse_pixel_format(const std::string& name);
std::string to_string(PixelFormat format);

// Byte size of one frame (luma plus any chroma) in a raw file.
std::size_t raw_frame_bytes(int width, int height, int bit_depth, PixelFormat format);

/// Random-access luma decoder over a Y4M or raw planar file. Frames are
/// decoded on demand so that only the frames being scored are resident.
class FrameSource {
 public:
  virtual ~FrameSource() = default;

  virtual std::size_t frame_count() const = 0;
  virtual LumaFrame read(std::size_t index) = 0;

  int width() const { return width_; }
  int height() const { return height_; }
  int bit_depth() const { return bit_depth_; }
  FrameRate frame_rate() const { return frame_rate_; }
  const std::string& descriptor() const { return descriptor_; }

 protected:
  LumaFrame decode_luma(std::size_t index, std::streamoff offset);

  std::ifstream file_;
  int width_ = 0;
  int height_ = 0;
  int bit_depth_ = 8;
  FrameRate frame_rate_;
  std::string descriptor_;
};

std::unique_ptr<FrameSource> open_y4m_source(const std::filesystem::path& path);
std::unique_ptr<FrameSource> open_raw_source(const std::filesystem::path& path, int width,
                                             int height, int bit_depth, PixelFormat format,
                                             FrameRate frame_rate);

/// Decodes every frame of a YUV4MPEG2 file, keeping luma only.
VideoStream open_y4m(const std::filesystem::path& path);

/// Decodes every frame of a raw planar file, keeping luma only.
VideoStream open_raw_yuv(const std::filesystem::path& path, int width, int height,
                         int bit_depth, PixelFormat format, FrameRate frame_rate);

/// Writes a 4:2:0 Y4M with neutral chroma (128, or 512 at 10 bits).
void write_y4m(const VideoStream& stream, const std::filesystem::path& path);

/// Writes frames as raw planes. yuv420 formats get neutral chroma.
void write_raw(const VideoStream& stream, const std::filesystem::path& path,
               PixelFormat format);

/// Binary P5 with maxval 255; each value v in [0,1] becomes round(v * 255).
void write_pgm(const FieldPlane& map, const std::filesystem::path& path);

/// Binary P6 through the fixed 256-entry colormap returned by heat_colormap().
void write_ppm(const FieldPlane& map, const std::filesystem::path& path);

struct Rgb {
  std::uint8_t r, g, b;
};

// Blue -> cyan -> green -> yellow -> red ramp, piecewise linear in 4 equal
// segments over the 256 indices.
const std::vector<Rgb>& heat_colormap();

}  // namespace cambi
