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

#include <doctest.h>

#include <set>

#include "cambi/errors.hpp"
#include "cambi/frame_io.hpp"
#include "cambi/synthgen.hpp"
#include "test_util.hpp"

using namespace cambi;
using testutil::TempDir;

namespace {

SyntheticSpec ramp(int w, int h, int start, int end, int quant, Dither dither = Dither::none) {
  SyntheticSpec s;
  s.width = w;
  s.height = h;
  s.pattern = Pattern::h_ramp;
  s.start_value = start;
  s.end_value = end;
  s.quant_step = quant;
  s.dither = dither;
  return s;
}

}  // namespace

TEST_CASE("flat pattern") {
  SyntheticSpec s;
  s.pattern = Pattern::flat;
  s.start_value = s.end_value = 400;
  s.frames = 3;
  const VideoStream v = generate(s);
  REQUIRE(v.size() == 3);
  for (const auto& f : v.frames) {
    CHECK(f.bit_depth == 8);
    CHECK((f.samples == 100).all());
  }
}

TEST_CASE("full-range ramp quantized to 16 steps by 4 codes in 8 bits") {
  const VideoStream v = generate(ramp(1024, 4, 0, 1023, 16));
  const LumaFrame& f = v.frames[0];
  // Round-to-nearest levels 0, 16, ..., 1024 (the last clamped to 1023):
  // 63 full 16-pixel bands with a half-width band at each end.
  std::vector<int> run_values, run_lengths;
  for (int x = 0; x < 1024; ++x) {
    if (x == 0 || f(0, x) != f(0, x - 1)) {
      run_values.push_back(f(0, x));
      run_lengths.push_back(0);
    }
    ++run_lengths.back();
  }
  REQUIRE(run_values.size() == 65);
  for (std::size_t i = 1; i + 1 < run_values.size(); ++i) {
    CHECK(run_values[i] - run_values[i - 1] == 4);
    CHECK(run_lengths[i] == 16);
  }
  CHECK(run_values.front() == 0);
  CHECK(run_values.back() == 255);
  CHECK(run_lengths.front() == 8);
  CHECK(run_lengths.back() == 8);
}

TEST_CASE("bayer dither on a flat mid-level") {
  // 408 sits halfway between the 400 and 416 levels: thresholds 0..7 round
  // down, 8..15 round up, so each 4x4 tile holds eight of each.
  SyntheticSpec s;
  s.width = 8;
  s.height = 8;
  s.pattern = Pattern::flat;
  s.start_value = s.end_value = 408;
  s.quant_step = 16;
  s.dither = Dither::bayer4;
  const LumaFrame f = generate(s).frames[0];
  const int bayer[4][4] = {{0, 8, 2, 10}, {12, 4, 14, 6}, {3, 11, 1, 9}, {15, 7, 13, 5}};
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x) CHECK(f(y, x) == (bayer[y % 4][x % 4] >= 8 ? 104 : 100));
  CHECK(f.samples.cast<double>().mean() == 102.0);
}

TEST_CASE("white noise is deterministic per seed") {
  SyntheticSpec s;
  s.pattern = Pattern::white_noise;
  s.start_value = 0;
  s.end_value = 1023;
  s.width = 33;
  s.height = 17;
  s.frames = 3;
  s.seed = 42;
  TempDir dir;
  write_y4m(generate(s), dir / "a.y4m");
  write_y4m(generate(s), dir / "b.y4m");
  CHECK(testutil::read_bytes(dir / "a.y4m") == testutil::read_bytes(dir / "b.y4m"));
  s.seed = 43;
  write_y4m(generate(s), dir / "c.y4m");
  CHECK(testutil::read_bytes(dir / "a.y4m") != testutil::read_bytes(dir / "c.y4m"));

  const VideoStream v = generate(s);
  CHECK_FALSE(v.frames[0] == v.frames[1]);
  CHECK(v.frames[0].samples.maxCoeff() <= 255);
}

TEST_CASE("vertical ramp varies along rows") {
  SyntheticSpec s = ramp(3, 64, 0, 1020, 0);
  s.pattern = Pattern::v_ramp;
  const LumaFrame f = generate(s).frames[0];
  CHECK(f(0, 0) == 0);
  CHECK(f(63, 2) == 255);
  CHECK(f(10, 0) == f(10, 2));
}

TEST_CASE("property: unquantized full-range ramp moves at most one code per column") {
  for (int w : {1024, 1500, 4000}) {
    const LumaFrame f = generate(ramp(w, 2, 0, 1023, 0)).frames[0];
    for (int x = 1; x < w; ++x) CHECK(std::abs(f(0, x) - f(0, x - 1)) <= 1);
  }
}

TEST_CASE("property: dithering preserves the mean within half a code") {
  for (int quant : {4, 8, 16, 32}) {
    for (auto [start, end] : {std::pair{0, 1023}, std::pair{300, 420}, std::pair{700, 640}}) {
      const double plain = generate(ramp(256, 64, start, end, quant)).frames[0].samples.cast<double>().mean();
      const double dithered =
          generate(ramp(256, 64, start, end, quant, Dither::bayer4)).frames[0].samples.cast<double>().mean();
      CHECK(std::abs(plain - dithered) <= 0.5);
    }
  }
}

TEST_CASE("property: generated Y4M round-trips the luma plane") {
  TempDir dir;
  SyntheticSpec s = ramp(50, 21, 100, 900, 8, Dither::bayer4);
  s.frames = 2;
  s.frame_rate = {30000, 1001};
  const VideoStream v = generate(s);
  write_y4m(v, dir / "r.y4m");
  const VideoStream back = open_y4m(dir / "r.y4m");
  REQUIRE(back.size() == 2);
  CHECK(back.frames[0] == v.frames[0]);
  CHECK(back.frames[1] == v.frames[1]);
  CHECK(back.frame_rate.num == 30000);
}

TEST_CASE("synthetic stimulus validation") {
  CHECK_THROWS_AS(generate(ramp(1, 8, 0, 1023, 0)), SpecError);
  SyntheticSpec v = ramp(8, 1, 0, 1023, 0);
  v.pattern = Pattern::v_ramp;
  CHECK_THROWS_AS(generate(v), SpecError);
  CHECK_THROWS_AS(generate(ramp(8, 8, 0, 1024, 0)), SpecError);
  CHECK_THROWS_AS(generate(ramp(8, 8, -1, 10, 0)), SpecError);
  CHECK_THROWS_AS(generate(ramp(8, 8, 0, 10, -4)), SpecError);
  SyntheticSpec flat;
  flat.width = 1;
  flat.height = 1;
  CHECK_NOTHROW(generate(flat));
}

TEST_CASE("key=value stimulus file parsing") {
  const SyntheticSpec s = parse_synthetic_spec(
      "# banding stimulus\n"
      "pattern = h_ramp\n"
      "width=320\nheight= 180\n"
      "start=256  # sky\n"
      "end=384\nquant_step=4\ndither=bayer4\nseed=9\nframes=5\nfps=24000/1001\n\n");
  CHECK(s.pattern == Pattern::h_ramp);
  CHECK(s.width == 320);
  CHECK(s.height == 180);
  CHECK(s.start_value == 256);
  CHECK(s.end_value == 384);
  CHECK(s.quant_step == 4);
  CHECK(s.dither == Dither::bayer4);
  CHECK(s.seed == 9);
  CHECK(s.frames == 5);
  CHECK(s.frame_rate.num == 24000);

  CHECK_THROWS_AS(parse_synthetic_spec("colour=red\n"), SpecError);
  CHECK_THROWS_AS(parse_synthetic_spec("width\n"), SpecError);
  CHECK_THROWS_AS(parse_synthetic_spec("width=abc\n"), SpecError);
  CHECK_THROWS_AS(parse_synthetic_spec("pattern=zigzag\n"), SpecError);
  CHECK_THROWS_AS(parse_synthetic_spec("fps=0\n"), SpecError);
}
