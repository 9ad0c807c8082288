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

#include "cambi/banding.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <span>
#include <string>
#include <thread>

#include "cambi/errors.hpp"
#include "cambi/pooling.hpp"

namespace cambi {

TextureMask texture_mask(const LumaFrame& frame, int tau_g) {
  const int w = frame.width();
  const int h = frame.height();
  TextureMask mask{Plane<std::uint8_t>(h, w)};
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int v = frame(y, x);
      const int dx = x + 1 < w ? std::abs(frame(y, x + 1) - v) : 0;
      const int dy = y + 1 < h ? std::abs(frame(y + 1, x) - v) : 0;
      mask.non_texture(y, x) = std::max(dx, dy) < tau_g ? 1 : 0;
    }
  }
  return mask;
}

LumaFrame mode_downsample(const LumaFrame& frame) {
  const int w = frame.width();
  const int h = frame.height();
  const int ow = (w + 1) / 2;
  const int oh = (h + 1) / 2;
  LumaFrame out(ow, oh, frame.bit_depth);
  std::array<std::uint16_t, 4> block{};
  for (int oy = 0; oy < oh; ++oy) {
    for (int ox = 0; ox < ow; ++ox) {
      int n = 0;
      for (int y = 2 * oy; y < std::min(2 * oy + 2, h); ++y) {
        for (int x = 2 * ox; x < std::min(2 * ox + 2, w); ++x) block[n++] = frame(y, x);
      }
      std::sort(block.begin(), block.begin() + n);
      std::uint16_t best = block[0];
      int best_run = 0;
      for (int i = 0; i < n;) {
        int j = i;
        while (j < n && block[j] == block[i]) ++j;
        if (j - i > best_run) best_run = j - i, best = block[i];
        i = j;
      }
      out.samples(oy, ox) = best;
    }
  }
  return out;
}

std::vector<double> neighborhood_fractions(const LumaFrame& frame, const TextureMask& mask, int x,
                                           int y, int window, int max_k) {
  std::vector<double> p(static_cast<std::size_t>(2 * max_k + 1), 0.0);
  std::vector<int> counts(p.size(), 0);
  const int r = window / 2;
  const int center = frame(y, x);
  int total = 0;
  for (int yy = std::max(0, y - r); yy <= std::min(frame.height() - 1, y + r); ++yy) {
    for (int xx = std::max(0, x - r); xx <= std::min(frame.width() - 1, x + r); ++xx) {
      if (!mask.non_texture(yy, xx)) continue;
      ++total;
      const int d = frame(yy, xx) - center;
      if (d >= -max_k && d <= max_k) ++counts[static_cast<std::size_t>(d + max_k)];
    }
  }
  if (total == 0) return p;
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = counts[i] / static_cast<double>(total);
  return p;
}

double confidence(const std::vector<double>& p, int k) {
  const int max_k = static_cast<int>(p.size() / 2);
  if (k < 1 || k > max_k || p.size() % 2 == 0) {
    throw ConfigError("contrast step " + std::to_string(k) + " outside fraction vector");
  }
  return confidence_from(p[max_k], p[max_k - k], p[max_k + k]);
}

namespace detail {

WindowHistogram::WindowHistogram(int width, int radius, int min_value, int max_value)
    : width_(width),
      radius_(radius),
      min_value_(min_value),
      max_value_(max_value),
      counts_(static_cast<std::size_t>(max_value - min_value + 1) * width, 0),
      totals_(static_cast<std::size_t>(width), 0),
      prefix_(static_cast<std::size_t>(width) + 1, 0) {}

template <int Sign>
void WindowHistogram::update(const std::uint16_t* values, const std::uint8_t* mask) {
  for (int x = 0; x < width_; ++x) prefix_[x + 1] = prefix_[x] + mask[x];
  for (int x = 0; x < width_; ++x) {
    const int lo = std::max(0, x - radius_);
    const int hi = std::min(width_ - 1, x + radius_);
    totals_[x] += Sign * (prefix_[hi + 1] - prefix_[lo]);
  }
  for (int xs = 0; xs < width_; ++xs) {
    if (!mask[xs]) continue;
    const int lo = std::max(0, xs - radius_);
    const int hi = std::min(width_ - 1, xs + radius_);
    std::uint16_t* row = counts_.data() + static_cast<std::size_t>(values[xs] - min_value_) * width_;
    for (int x = lo; x <= hi; ++x) row[x] = static_cast<std::uint16_t>(row[x] + Sign);
  }
}

void WindowHistogram::add_row(const std::uint16_t* values, const std::uint8_t* mask) {
  update<1>(values, mask);
}

void WindowHistogram::remove_row(const std::uint16_t* values, const std::uint8_t* mask) {
  update<-1>(values, mask);
}

}  // namespace detail

namespace {

// Receives row y of every k as one buffer: entry (k - 1) * width + x.
using RowSink = std::function<void(int y, std::span<const double> rows)>;

void scan_rows(const LumaFrame& frame, const TextureMask& mask, int window, int max_k,
               int min_value, int max_value, int row_begin, int row_end, const RowSink& sink) {
  const int w = frame.width();
  const int h = frame.height();
  const int r = window / 2;
  detail::WindowHistogram hist(w, r, min_value, max_value);
  const auto row_values = [&](int y) { return frame.samples.data() + static_cast<std::size_t>(y) * w; };
  const auto row_mask = [&](int y) { return mask.non_texture.data() + static_cast<std::size_t>(y) * w; };

  for (int y = std::max(0, row_begin - r); y <= std::min(h - 1, row_begin + r); ++y) {
    hist.add_row(row_values(y), row_mask(y));
  }
  std::vector<double> buf(static_cast<std::size_t>(max_k) * w);
  for (int y = row_begin; y < row_end; ++y) {
    if (y > row_begin) {
      if (y - r - 1 >= 0) hist.remove_row(row_values(y - r - 1), row_mask(y - r - 1));
      if (y + r < h) hist.add_row(row_values(y + r), row_mask(y + r));
    }
    const std::uint16_t* values = row_values(y);
    for (int x = 0; x < w; ++x) {
      const int total = hist.total(x);
      if (total == 0) {
        for (int k = 1; k <= max_k; ++k) buf[static_cast<std::size_t>(k - 1) * w + x] = 0.0;
        continue;
      }
      const double denom = total;
      const int c = values[x];
      const double p0 = hist.count(c, x) / denom;
      for (int k = 1; k <= max_k; ++k) {
        const double pm = hist.count(c - k, x) / denom;
        const double pp = hist.count(c + k, x) / denom;
        buf[static_cast<std::size_t>(k - 1) * w + x] = confidence_from(p0, pm, pp);
      }
    }
    sink(y, buf);
  }
}

// Splits rows into contiguous bands, one histogram per worker. Each output
// row is produced by exactly one worker, so results do not depend on
// `threads`.
void scan_frame(const LumaFrame& frame, const TextureMask& mask, int window, int max_k,
                int threads, const RowSink& sink) {
  const int h = frame.height();
  if (h == 0 || frame.width() == 0) return;
  const int min_value = frame.samples.minCoeff();
  const int max_value = frame.samples.maxCoeff();
  const int workers = std::clamp(threads, 1, h);
  if (workers == 1) {
    scan_rows(frame, mask, window, max_k, min_value, max_value, 0, h, sink);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int i = 0; i < workers; ++i) {
    const int begin = static_cast<int>(static_cast<std::int64_t>(h) * i / workers);
    const int end = static_cast<int>(static_cast<std::int64_t>(h) * (i + 1) / workers);
    pool.emplace_back([&, begin, end] {
      scan_rows(frame, mask, window, max_k, min_value, max_value, begin, end, sink);
    });
  }
}

void check_input(const LumaFrame& frame, const CambiConfig& config) {
  validate(config);
  if (frame.bit_depth != 10) throw ConfigError("banding maps need a 10-bit frame");
  if (frame.width() != config.canvas_width || frame.height() != config.canvas_height) {
    throw ConfigError("banding maps need a canvas-sized frame (" +
                      std::to_string(config.canvas_width) + "x" +
                      std::to_string(config.canvas_height) + "), got " +
                      std::to_string(frame.width()) + "x" + std::to_string(frame.height()));
  }
}

// Frames for scale 0..num_scales-1, each a 2x mode reduction of the last.
std::vector<LumaFrame> scale_chain(const LumaFrame& frame, int num_scales) {
  std::vector<LumaFrame> chain;
  chain.reserve(static_cast<std::size_t>(num_scales));
  chain.push_back(frame);
  for (int s = 1; s < num_scales; ++s) {
    chain.push_back(mode_downsample(chain.back()));
    if (chain.back().width() == 0 || chain.back().height() == 0) {
      throw ConfigError("scale " + std::to_string(s) + " has an empty dimension");
    }
  }
  return chain;
}

}  // namespace

std::vector<ConfidenceMap> compute_scale_maps(const LumaFrame& frame, const CambiConfig& config,
                                              int scale_index, int threads) {
  validate(config);
  const int w = frame.width();
  const int h = frame.height();
  std::vector<ConfidenceMap> maps;
  for (int k = 1; k <= config.max_k; ++k) {
    maps.push_back({k, scale_index, FieldPlane::Zero(h, w)});
  }
  const TextureMask mask = texture_mask(frame, config.tau_g);
  scan_frame(frame, mask, config.window, config.max_k, threads,
             [&](int y, std::span<const double> rows) {
               for (int k = 0; k < config.max_k; ++k) {
                 std::copy_n(rows.data() + static_cast<std::size_t>(k) * w, w,
                             maps[static_cast<std::size_t>(k)].values.row(y).data());
               }
             });
  return maps;
}

BandingMapSet compute_map_set(const LumaFrame& frame, const CambiConfig& config, int threads) {
  check_input(frame, config);
  BandingMapSet set;
  set.max_k = config.max_k;
  set.num_scales = config.num_scales;
  const auto chain = scale_chain(frame, config.num_scales);
  for (int s = 0; s < config.num_scales; ++s) {
    auto maps = compute_scale_maps(chain[static_cast<std::size_t>(s)], config, s, threads);
    for (auto& m : maps) set.maps.push_back(std::move(m));
  }
  return set;
}

FieldPlane combined_field(const LumaFrame& frame, const CambiConfig& config, int threads) {
  check_input(frame, config);
  const int cw = config.canvas_width;
  const int ch = config.canvas_height;
  FieldPlane combined = FieldPlane::Zero(ch, cw);
  LumaFrame current = frame;
  for (int s = 0; s < config.num_scales; ++s) {
    if (s > 0) current = mode_downsample(current);
    const double weight = scale_weight(s);
    // A zero weight adds +0.0 to every pixel, which leaves the field as is.
    if (weight == 0.0) continue;
    const int w = current.width();
    const TextureMask mask = texture_mask(current, config.tau_g);
    scan_frame(current, mask, config.window, config.max_k, threads,
               [&](int y, std::span<const double> rows) {
                 const int y0 = y << s;
                 const int y1 = std::min(ch, (y + 1) << s);
                 for (int cy = y0; cy < y1; ++cy) {
                   double* dst = combined.row(cy).data();
                   for (int k = 1; k <= config.max_k; ++k) {
                     const double* src = rows.data() + static_cast<std::size_t>(k - 1) * w;
                     for (int cx = 0; cx < cw; ++cx) {
                       dst[cx] += weighted_confidence(src[cx >> s], k, weight);
                     }
                   }
                 }
               });
  }
  return combined;
}

}  // namespace cambi
