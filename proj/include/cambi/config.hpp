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

namespace cambi {

/// Pipeline hyperparameters. Defaults are the published operating point:
/// 4k canvas, 65x65 window, gradient threshold 2, contrasts 1..4, five
/// scales, worst-30% spatial pooling and one scored frame every 0.5 s.
struct CambiConfig {
  int canvas_width = 3840;
  int canvas_height = 2160;
  int window = 65;
  int tau_g = 2;
  int max_k = 4;
  int num_scales = 5;
  double top_percent = 0.30;
  double t_sec = 0.5;
};

// Largest scale count for which every pooling weight log2(16 / 2^s) is >= 0.
inline constexpr int kMaxScales = 5;

/// Throws ConfigError on any violated invariant.
void validate(const CambiConfig& config);

}  // namespace cambi
