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

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <unistd.h>

#include "cambi/frame.hpp"

namespace testutil {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = fs::temp_directory_path() /
            ("cambi_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  fs::path operator/(const std::string& name) const { return path_ / name; }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

inline void write_bytes(const fs::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary);
  out << bytes;
}

inline std::string read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline cambi::LumaFrame random_frame(std::mt19937& rng, int w, int h, int depth, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  cambi::LumaFrame f(w, h, depth);
  for (Eigen::Index i = 0; i < f.samples.size(); ++i) {
    f.samples.data()[i] = static_cast<std::uint16_t>(dist(rng));
  }
  return f;
}

// Piecewise-constant 10-bit frame: random rectangles of nearby plateau
// values plus sparse noise, so that banding confidence is non-trivial.
inline cambi::LumaFrame blocky_frame(std::mt19937& rng, int w, int h) {
  std::uniform_int_distribution<int> base(200, 800);
  const int b = base(rng);
  cambi::LumaFrame f(w, h, 10, static_cast<std::uint16_t>(b));
  std::uniform_int_distribution<int> pos_x(0, w - 1), pos_y(0, h - 1), delta(-6, 6),
      count(3, 12), pct(0, 99);
  const int rects = count(rng);
  for (int r = 0; r < rects; ++r) {
    int x0 = pos_x(rng), x1 = pos_x(rng), y0 = pos_y(rng), y1 = pos_y(rng);
    if (x0 > x1) std::swap(x0, x1);
    if (y0 > y1) std::swap(y0, y1);
    const int d = delta(rng);
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x) f.samples(y, x) = static_cast<std::uint16_t>(b + d);
  }
  for (Eigen::Index i = 0; i < f.samples.size(); ++i) {
    if (pct(rng) < 5) f.samples.data()[i] = static_cast<std::uint16_t>(f.samples.data()[i] + delta(rng));
  }
  return f;
}

}  // namespace testutil
