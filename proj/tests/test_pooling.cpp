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

#include <algorithm>
#include <numeric>
#include <random>

#include "cambi/errors.hpp"
#include "cambi/pooling.hpp"

using namespace cambi;

namespace {

CambiConfig canvas(int w, int h) {
  CambiConfig c;
  c.canvas_width = w;
  c.canvas_height = h;
  return c;
}

BandingMapSet zero_set(const CambiConfig& c) {
  BandingMapSet set;
  set.max_k = c.max_k;
  set.num_scales = c.num_scales;
  for (int s = 0; s < c.num_scales; ++s) {
    const int w = (c.canvas_width + (1 << s) - 1) >> s;
    const int h = (c.canvas_height + (1 << s) - 1) >> s;
    for (int k = 1; k <= c.max_k; ++k) set.maps.push_back({k, s, FieldPlane::Zero(h, w)});
  }
  return set;
}

ConfidenceMap& mutable_at(BandingMapSet& set, int k, int s) {
  return set.maps[static_cast<std::size_t>(s * set.max_k + k - 1)];
}

BandingMapSet random_set(std::mt19937& rng, const CambiConfig& c) {
  BandingMapSet set = zero_set(c);
  std::uniform_real_distribution<double> u(0.0, 0.5);
  for (auto& m : set.maps)
    for (Eigen::Index i = 0; i < m.values.size(); ++i) m.values.data()[i] = u(rng);
  return set;
}

}  // namespace

TEST_CASE("scale weights") {
  CHECK(scale_weight(0) == 4.0);
  CHECK(scale_weight(1) == 3.0);
  CHECK(scale_weight(2) == 2.0);
  CHECK(scale_weight(3) == 1.0);
  CHECK(scale_weight(4) == 0.0);
}

TEST_CASE("per_pixel_combined examples") {
  const CambiConfig c = canvas(20, 12);
  SUBCASE("single scale-0, k=4 term") {
    BandingMapSet set = zero_set(c);
    mutable_at(set, 4, 0).values.setConstant(0.25);
    CHECK((per_pixel_combined(set, c) == 4.0).all());
  }
  SUBCASE("coarsest scale carries zero weight") {
    BandingMapSet set = zero_set(c);
    for (int k = 1; k <= 4; ++k) mutable_at(set, k, 4).values.setConstant(0.5);
    CHECK((per_pixel_combined(set, c) == 0.0).all());
  }
  SUBCASE("all zero") { CHECK((per_pixel_combined(zero_set(c), c) == 0.0).all()); }
  SUBCASE("coarse maps replicate in 2^s blocks") {
    BandingMapSet set = zero_set(c);
    mutable_at(set, 2, 2).values(1, 2) = 0.5;  // canvas block y 4..7, x 8..11
    const FieldPlane f = per_pixel_combined(set, c);
    for (int y = 0; y < 12; ++y)
      for (int x = 0; x < 20; ++x) {
        const bool inside = y >= 4 && y < 8 && x >= 8 && x < 12;
        CHECK(f(y, x) == (inside ? 0.5 * 2 * 2 : 0.0));
      }
  }
}

TEST_CASE("pool_top_percent examples") {
  CHECK(pool_top_percent(FieldPlane::Constant(7, 3, 4.0), 0.3) == 4.0);
  CHECK(pool_top_percent(FieldPlane::Constant(7, 3, 4.0), 1.0) == 4.0);

  FieldPlane ten = FieldPlane::Zero(1, 10);
  ten(0, 0) = 9.0;
  CHECK(pool_top_percent(ten, 0.30) == 3.0);

  FieldPlane r(2, 3);
  r << 1, 2, 3, 4, 5, 6;
  CHECK(pool_top_percent(r, 1.0) == doctest::Approx(3.5));
  CHECK(pool_top_percent(r, 0.5) == doctest::Approx(5.0));
  CHECK(pool_top_percent(r, 0.01) == 6.0);  // floor gives 0, at least one pixel

  CHECK_THROWS_AS(pool_top_percent(r, 0.0), ConfigError);
  CHECK_THROWS_AS(pool_top_percent(r, 1.5), ConfigError);
  CHECK_THROWS_AS(pool_top_percent(FieldPlane(0, 0), 0.3), EmptyInputError);
}

TEST_CASE("frame_score carries index and time") {
  const CambiConfig c = canvas(8, 8);
  BandingMapSet set = zero_set(c);
  set.frame_index = 12;
  set.time_sec = 0.4;
  mutable_at(set, 1, 0).values.setConstant(0.5);
  const FrameScore s = frame_score(set, c);
  CHECK(s.frame_index == 12);
  CHECK(s.time_sec == 0.4);
  CHECK(s.score == 2.0);
}

TEST_CASE("select_frames examples") {
  auto indices = [](const std::vector<SelectedFrame>& v) {
    std::vector<std::size_t> out;
    for (const auto& s : v) out.push_back(s.index);
    return out;
  };
  CHECK(indices(select_frames(61, {30, 1}, 0.5)) == std::vector<std::size_t>{0, 15, 30, 45, 60});
  CHECK(indices(select_frames(1, {30, 1}, 0.5)) == std::vector<std::size_t>{0});

  const auto ntsc = select_frames(100, {24000, 1001}, 0.5);
  CHECK(indices(ntsc) == std::vector<std::size_t>{0, 12, 24, 36, 48, 60, 72, 84, 96});
  CHECK(ntsc[1].time_sec == doctest::Approx(12 * 1001.0 / 24000.0));

  CHECK(indices(select_frames(4, {10, 1}, 0.05)) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK_THROWS_AS(select_frames(0, {30, 1}, 0.5), EmptyInputError);
  CHECK_THROWS_AS(select_frames(10, {30, 1}, 0.0), ConfigError);
}

TEST_CASE("video_score examples") {
  const auto report = [](std::vector<double> scores) {
    std::vector<FrameScore> fs;
    for (std::size_t i = 0; i < scores.size(); ++i) fs.push_back({i, 0.5 * i, scores[i]});
    return video_score(fs);
  };
  const VideoReport a = report({2.0, 4.0});
  CHECK(a.video_score == 3.0);
  CHECK_FALSE(a.banding_flag);
  const VideoReport b = report({6.0});
  CHECK(b.video_score == 6.0);
  CHECK(b.banding_flag);
  CHECK(report({5.0}).banding_flag);
  const VideoReport z = report({0, 0, 0});
  CHECK(z.video_score == 0.0);
  CHECK_FALSE(z.banding_flag);
  CHECK(z.frame_scores.size() == 3);
  CHECK_THROWS_AS(video_score(std::vector<FrameScore>{}), EmptyInputError);
}

TEST_CASE("property: top-percent pooling dominates the plain mean") {
  std::mt19937 rng(31);
  const CambiConfig c = canvas(23, 17);
  for (int trial = 0; trial < 20; ++trial) {
    const FieldPlane field = per_pixel_combined(random_set(rng, c), c);
    const double mean = field.mean();
    CHECK(pool_top_percent(field, 1.0) == doctest::Approx(mean).epsilon(1e-12));
    for (double p : {0.01, 0.3, 0.75}) CHECK(pool_top_percent(field, p) >= mean);
  }
}

TEST_CASE("property: frame score is monotone in every confidence value") {
  std::mt19937 rng(32);
  const CambiConfig c = canvas(16, 12);
  for (int trial = 0; trial < 40; ++trial) {
    BandingMapSet set = random_set(rng, c);
    const double before = frame_score(set, c).score;
    auto& m = set.maps[rng() % set.maps.size()];
    const auto i = static_cast<Eigen::Index>(rng() % static_cast<unsigned>(m.values.size()));
    m.values.data()[i] = std::min(0.5, m.values.data()[i] + 0.2);
    // Allow for one rounding step of the pooled sum.
    CHECK(frame_score(set, c).score >= before * (1.0 - 1e-14));
  }
}

TEST_CASE("property: video score of identical and permuted frames") {
  std::mt19937 rng(33);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double v = u(rng);
    std::vector<FrameScore> same(1 + rng() % 9, FrameScore{0, 0.0, v});
    CHECK(video_score(same).video_score == doctest::Approx(v).epsilon(1e-15));

    std::vector<FrameScore> fs;
    for (std::size_t i = 0; i < 12; ++i) fs.push_back({i, 0.0, u(rng)});
    const double ordered = video_score(fs).video_score;
    std::shuffle(fs.begin(), fs.end(), rng);
    CHECK(video_score(fs).video_score == ordered);
  }
}
