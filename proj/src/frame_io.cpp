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

#include "cambi/frame_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <sstream>

#include "cambi/errors.hpp"

namespace cambi {

namespace fs = std::filesystem;

void validate(const LumaFrame& frame) {
  if (frame.bit_depth != 8 && frame.bit_depth != 10) {
    throw FormatError("unsupported bit depth " + std::to_string(frame.bit_depth));
  }
  if (frame.samples.size() > 0 && frame.samples.maxCoeff() > frame.max_value()) {
    throw FormatError("sample " + std::to_string(frame.samples.maxCoeff()) + " exceeds " +
                      std::to_string(frame.bit_depth) + "-bit range");
  }
}

namespace {

bool parse_int(std::string_view text, std::int64_t& value) {
  if (text.empty()) return false;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

FrameRate parse_frame_rate(const std::string& text) {
  const auto sep = text.find_first_of("/:");
  std::int64_t num = 0;
  std::int64_t den = 1;
  if (sep != std::string::npos) {
    if (!parse_int(std::string_view(text).substr(0, sep), num) ||
        !parse_int(std::string_view(text).substr(sep + 1), den)) {
      throw ConfigError("malformed frame rate '" + text + "'");
    }
  } else if (!parse_int(text, num)) {
    // Decimal rate, kept exact to the millihertz.
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || !std::isfinite(v)) {
      throw ConfigError("malformed frame rate '" + text + "'");
    }
    num = std::llround(v * 1000.0);
    den = 1000;
  }
  if (num <= 0 || den <= 0) throw ConfigError("frame rate must be positive: '" + text + "'");
  return {num, den};
}

PixelFormat parse_pixel_format(const std::string& name) {
  if (name == "yuv420" || name == "yuv420p") return PixelFormat::yuv420;
  if (name == "yuv420p10le") return PixelFormat::yuv420p10le;
  if (name == "gray") return PixelFormat::gray;
  throw ConfigError("unknown pixel format '" + name + "'");
}

std::string to_string(PixelFormat format) {
  switch (format) {
    case PixelFormat::yuv420:
      return "yuv420";
    case PixelFormat::yuv420p10le:
      return "yuv420p10le";
    case PixelFormat::gray:
      return "gray";
  }
  return "?";
}

namespace {

struct ChromaLayout {
  int log2_sub_x = 1;  // -1: no chroma planes
  int log2_sub_y = 1;
};

std::size_t chroma_bytes(int width, int height, int bytes_per_sample, ChromaLayout layout) {
  if (layout.log2_sub_x < 0) return 0;
  const std::size_t cw = (static_cast<std::size_t>(width) + (1u << layout.log2_sub_x) - 1) >>
                         layout.log2_sub_x;
  const std::size_t ch = (static_cast<std::size_t>(height) + (1u << layout.log2_sub_y) - 1) >>
                         layout.log2_sub_y;
  return 2 * cw * ch * static_cast<std::size_t>(bytes_per_sample);
}

ChromaLayout layout_of(PixelFormat format) {
  return format == PixelFormat::gray ? ChromaLayout{-1, -1} : ChromaLayout{1, 1};
}

}  // namespace

std::size_t raw_frame_bytes(int width, int height, int bit_depth, PixelFormat format) {
  const int bps = bit_depth > 8 ? 2 : 1;
  return static_cast<std::size_t>(width) * height * bps +
         chroma_bytes(width, height, bps, layout_of(format));
}

LumaFrame FrameSource::decode_luma(std::size_t index, std::streamoff offset) {
  const int bps = bit_depth_ > 8 ? 2 : 1;
  const std::size_t count = static_cast<std::size_t>(width_) * height_;
  std::vector<unsigned char> bytes(count * bps);
  file_.clear();
  file_.seekg(offset);
  file_.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (static_cast<std::size_t>(file_.gcount()) != bytes.size()) {
    throw TruncationError("frame " + std::to_string(index) + " truncated");
  }
  LumaFrame frame(width_, height_, bit_depth_);
  std::uint16_t* dst = frame.samples.data();
  if (bps == 1) {
    std::copy(bytes.begin(), bytes.end(), dst);
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      dst[i] = static_cast<std::uint16_t>(bytes[2 * i] | (bytes[2 * i + 1] << 8));
    }
    const auto max = frame.max_value();
    for (std::size_t i = 0; i < count; ++i) {
      if (dst[i] > max) {
        throw FormatError("frame " + std::to_string(index) + ": sample " +
                          std::to_string(dst[i]) + " exceeds 10-bit range");
      }
    }
  }
  return frame;
}

namespace {

class Y4mSource final : public FrameSource {
 public:
  explicit Y4mSource(const fs::path& path) {
    file_.open(path, std::ios::binary);
    if (!file_) throw IoError("cannot open '" + path.string() + "'");
    const auto file_size = static_cast<std::streamoff>(fs::file_size(path));

    std::string header;
    if (!std::getline(file_, header)) throw FormatError("empty file, missing YUV4MPEG2 header");
    if (file_.eof()) throw FormatError("unterminated YUV4MPEG2 header");
    parse_header(header);
    descriptor_ = path.string() + " (y4m C" + colorspace_ + ")";

    const std::size_t payload =
        static_cast<std::size_t>(width_) * height_ * bps_ +
        chroma_bytes(width_, height_, bps_, layout_);
    std::streamoff pos = file_.tellg();
    while (pos < file_size) {
      file_.seekg(pos);
      std::string line;
      std::getline(file_, line);
      if (line.rfind("FRAME", 0) != 0) {
        if (file_.eof() && std::string_view("FRAME").substr(0, line.size()) == line) {
          throw TruncationError("frame " + std::to_string(offsets_.size()) +
                                " truncated in frame header");
        }
        throw FormatError("frame " + std::to_string(offsets_.size()) +
                          ": expected FRAME marker");
      }
      if (file_.eof()) {
        throw TruncationError("frame " + std::to_string(offsets_.size()) +
                              " truncated in frame header");
      }
      const std::streamoff start = file_.tellg();
      if (start + static_cast<std::streamoff>(payload) > file_size) {
        throw TruncationError("frame " + std::to_string(offsets_.size()) + " truncated: " +
                              std::to_string(file_size - start) + " of " +
                              std::to_string(payload) + " payload bytes");
      }
      offsets_.push_back(start);
      pos = start + static_cast<std::streamoff>(payload);
    }
  }

  std::size_t frame_count() const override { return offsets_.size(); }

  LumaFrame read(std::size_t index) override {
    if (index >= offsets_.size()) throw Error("frame index out of range");
    return decode_luma(index, offsets_[index]);
  }

 private:
  void parse_header(const std::string& header) {
    std::istringstream tokens(header);
    std::string magic;
    tokens >> magic;
    if (magic != "YUV4MPEG2") throw FormatError("missing YUV4MPEG2 signature");
    bool have_w = false, have_h = false, have_f = false;
    colorspace_ = "420jpeg";
    std::string tok;
    while (tokens >> tok) {
      const auto bad = [&] { return FormatError("malformed header token '" + tok + "'"); };
      const std::string_view body = std::string_view(tok).substr(1);
      std::int64_t v = 0;
      switch (tok[0]) {
        case 'W':
          if (!parse_int(body, v) || v <= 0) throw bad();
          width_ = static_cast<int>(v);
          have_w = true;
          break;
        case 'H':
          if (!parse_int(body, v) || v <= 0) throw bad();
          height_ = static_cast<int>(v);
          have_h = true;
          break;
        case 'F': {
          const auto colon = body.find(':');
          std::int64_t n = 0, d = 0;
          if (colon == std::string_view::npos || !parse_int(body.substr(0, colon), n) ||
              !parse_int(body.substr(colon + 1), d) || n <= 0 || d <= 0) {
            throw bad();
          }
          frame_rate_ = {n, d};
          have_f = true;
          break;
        }
        case 'I':
          // Only progressive (or unknown) scan is supported.
          if (body != "p" && body != "?") throw bad();
          break;
        case 'C':
          colorspace_ = std::string(body);
          break;
        case 'A':
        case 'X':
          break;
        default:
          throw bad();
      }
    }
    if (!have_w) throw FormatError("missing header token 'W'");
    if (!have_h) throw FormatError("missing header token 'H'");
    if (!have_f) throw FormatError("missing header token 'F'");

    const std::string& c = colorspace_;
    if (c == "420" || c == "420jpeg" || c == "420paldv" || c == "420mpeg2") {
      bit_depth_ = 8, layout_ = {1, 1};
    } else if (c == "420p10") {
      bit_depth_ = 10, layout_ = {1, 1};
    } else if (c == "422") {
      bit_depth_ = 8, layout_ = {1, 0};
    } else if (c == "422p10") {
      bit_depth_ = 10, layout_ = {1, 0};
    } else if (c == "444") {
      bit_depth_ = 8, layout_ = {0, 0};
    } else if (c == "444p10") {
      bit_depth_ = 10, layout_ = {0, 0};
    } else if (c == "mono") {
      bit_depth_ = 8, layout_ = {-1, -1};
    } else if (c == "mono10") {
      bit_depth_ = 10, layout_ = {-1, -1};
    } else {
      throw FormatError("malformed header token 'C" + c + "'");
    }
    bps_ = bit_depth_ > 8 ? 2 : 1;
  }

  std::string colorspace_;
  ChromaLayout layout_;
  int bps_ = 1;
  std::vector<std::streamoff> offsets_;
};

class RawSource final : public FrameSource {
 public:
  RawSource(const fs::path& path, int width, int height, int bit_depth, PixelFormat format,
            FrameRate rate) {
    if (width <= 0 || height <= 0) throw ConfigError("raw width and height must be positive");
    if (format == PixelFormat::yuv420 && bit_depth != 8) {
      throw ConfigError("pixel format yuv420 is 8-bit");
    }
    if (format == PixelFormat::yuv420p10le && bit_depth != 10) {
      throw ConfigError("pixel format yuv420p10le is 10-bit");
    }
    if (bit_depth != 8 && bit_depth != 10) {
      throw ConfigError("unsupported bit depth " + std::to_string(bit_depth));
    }
    if (rate.num <= 0 || rate.den <= 0) throw ConfigError("frame rate must be positive");
    file_.open(path, std::ios::binary);
    if (!file_) throw IoError("cannot open '" + path.string() + "'");
    width_ = width;
    height_ = height;
    bit_depth_ = bit_depth;
    frame_rate_ = rate;
    frame_bytes_ = raw_frame_bytes(width, height, bit_depth, format);
    const auto size = fs::file_size(path);
    if (size % frame_bytes_ != 0) {
      throw TruncationError("file size " + std::to_string(size) +
                            " is not a multiple of the frame size " +
                            std::to_string(frame_bytes_) + " bytes");
    }
    count_ = size / frame_bytes_;
    descriptor_ = path.string() + " (raw " + to_string(format) + ")";
  }

  std::size_t frame_count() const override { return count_; }

  LumaFrame read(std::size_t index) override {
    if (index >= count_) throw Error("frame index out of range");
    return decode_luma(index, static_cast<std::streamoff>(index * frame_bytes_));
  }

 private:
  std::size_t frame_bytes_ = 0;
  std::size_t count_ = 0;
};

VideoStream read_all(FrameSource& source) {
  VideoStream stream;
  stream.frame_rate = source.frame_rate();
  stream.source_descriptor = source.descriptor();
  stream.frames.reserve(source.frame_count());
  for (std::size_t i = 0; i < source.frame_count(); ++i) stream.frames.push_back(source.read(i));
  return stream;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void put_plane(std::ofstream& out, const SamplePlane& plane, int bps) {
  if (bps == 1) {
    std::vector<char> bytes(static_cast<std::size_t>(plane.size()));
    std::transform(plane.data(), plane.data() + plane.size(), bytes.begin(),
                   [](std::uint16_t v) { return static_cast<char>(v); });
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  } else {
    std::vector<char> bytes(static_cast<std::size_t>(plane.size()) * 2);
    for (Eigen::Index i = 0; i < plane.size(); ++i) {
      bytes[2 * i] = static_cast<char>(plane.data()[i] & 0xff);
      bytes[2 * i + 1] = static_cast<char>(plane.data()[i] >> 8);
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  }
}

void put_neutral_chroma(std::ofstream& out, int width, int height, int bit_depth) {
  const int bps = bit_depth > 8 ? 2 : 1;
  const SamplePlane chroma = SamplePlane::Constant(
      (height + 1) / 2, (width + 1) / 2, static_cast<std::uint16_t>(1u << (bit_depth - 1)));
  put_plane(out, chroma, bps);
  put_plane(out, chroma, bps);
}

void check_stream(const VideoStream& stream) {
  if (stream.empty()) return;
  const auto& first = stream.frames.front();
  for (const auto& f : stream.frames) {
    validate(f);
    if (f.width() != first.width() || f.height() != first.height() ||
        f.bit_depth != first.bit_depth) {
      throw ConfigError("frames in a stream must share geometry and bit depth");
    }
  }
}

void check_unit_range(const FieldPlane& map) {
  if (map.size() > 0 && (map.minCoeff() < 0.0 || map.maxCoeff() > 1.0 || map.hasNaN())) {
    throw ConfigError("map values must lie in [0,1]");
  }
}

std::uint8_t to_byte(double v) { return static_cast<std::uint8_t>(std::lround(v * 255.0)); }

}  // namespace

std::unique_ptr<FrameSource> open_y4m_source(const fs::path& path) {
  return std::make_unique<Y4mSource>(path);
}

std::unique_ptr<FrameSource> open_raw_source(const fs::path& path, int width, int height,
                                             int bit_depth, PixelFormat format,
                                             FrameRate frame_rate) {
  return std::make_unique<RawSource>(path, width, height, bit_depth, format, frame_rate);
}

VideoStream open_y4m(const fs::path& path) {
  Y4mSource source(path);
  return read_all(source);
}

VideoStream open_raw_yuv(const fs::path& path, int width, int height, int bit_depth,
                         PixelFormat format, FrameRate frame_rate) {
  RawSource source(path, width, height, bit_depth, format, frame_rate);
  return read_all(source);
}

void write_y4m(const VideoStream& stream, const fs::path& path) {
  if (stream.empty()) throw EmptyInputError("cannot write a Y4M with no frames");
  check_stream(stream);
  const auto& first = stream.frames.front();
  auto out = open_output(path);
  out << "YUV4MPEG2 W" << first.width() << " H" << first.height() << " F"
      << stream.frame_rate.num << ':' << stream.frame_rate.den << " Ip A1:1 C"
      << (first.bit_depth > 8 ? "420p10" : "420") << '\n';
  for (const auto& f : stream.frames) {
    out << "FRAME\n";
    put_plane(out, f.samples, f.bit_depth > 8 ? 2 : 1);
    put_neutral_chroma(out, f.width(), f.height(), f.bit_depth);
  }
  finish(out, path);
}

void write_raw(const VideoStream& stream, const fs::path& path, PixelFormat format) {
  check_stream(stream);
  auto out = open_output(path);
  for (const auto& f : stream.frames) {
    if (format == PixelFormat::yuv420 && f.bit_depth != 8) {
      throw ConfigError("yuv420 output needs 8-bit frames");
    }
    if (format == PixelFormat::yuv420p10le && f.bit_depth != 10) {
      throw ConfigError("yuv420p10le output needs 10-bit frames");
    }
    put_plane(out, f.samples, f.bit_depth > 8 ? 2 : 1);
    if (format != PixelFormat::gray) put_neutral_chroma(out, f.width(), f.height(), f.bit_depth);
  }
  finish(out, path);
}

void write_pgm(const FieldPlane& map, const fs::path& path) {
  check_unit_range(map);
  auto out = open_output(path);
  out << "P5\n" << map.cols() << ' ' << map.rows() << "\n255\n";
  std::vector<char> bytes(static_cast<std::size_t>(map.size()));
  for (Eigen::Index i = 0; i < map.size(); ++i) {
    bytes[static_cast<std::size_t>(i)] = static_cast<char>(to_byte(map.data()[i]));
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  finish(out, path);
}

const std::vector<Rgb>& heat_colormap() {
  static const std::vector<Rgb> table = [] {
    std::vector<Rgb> t(256);
    for (int i = 0; i < 256; ++i) {
      const double u = i / 255.0 * 4.0;
      const int seg = std::min(3, static_cast<int>(u));
      const auto f = static_cast<std::uint8_t>(std::lround((u - seg) * 255.0));
      const auto g = static_cast<std::uint8_t>(255 - f);
      switch (seg) {
        case 0:
          t[i] = {0, f, 255};
          break;
        case 1:
          t[i] = {0, 255, g};
          break;
        case 2:
          t[i] = {f, 255, 0};
          break;
        default:
          t[i] = {255, g, 0};
          break;
      }
    }
    return t;
  }();
  return table;
}

void write_ppm(const FieldPlane& map, const fs::path& path) {
  check_unit_range(map);
  const auto& lut = heat_colormap();
  auto out = open_output(path);
  out << "P6\n" << map.cols() << ' ' << map.rows() << "\n255\n";
  std::vector<char> bytes(static_cast<std::size_t>(map.size()) * 3);
  for (Eigen::Index i = 0; i < map.size(); ++i) {
    const Rgb c = lut[to_byte(map.data()[i])];
    bytes[3 * i] = static_cast<char>(c.r);
    bytes[3 * i + 1] = static_cast<char>(c.g);
    bytes[3 * i + 2] = static_cast<char>(c.b);
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  finish(out, path);
}

}  // namespace cambi
